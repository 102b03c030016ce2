#include "kreweras/sampler.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kreweras/bijection.hpp"
#include "kreweras/map_ops.hpp"

namespace kreweras {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Index just after the strict first minimum of the +2/-1 prefix sums.
std::size_t first_minimum_cut(std::string_view letters) {
  std::int64_t sum = 0;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::size_t first_min = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    sum += letters[k] == 'c' ? 2 : -1;
    if (sum < best) {
      best = sum;
      first_min = k + 1;
    }
  }
  return first_min;
}

/// The total displacement is -1, so the running sum has a strict first
/// minimum; rotating the word to start just after it and dropping the cut
/// letter leaves a nonnegative word with zero total.
void cut_at_first_minimum(std::string& letters) {
  const auto cut = static_cast<std::ptrdiff_t>(first_minimum_cut(letters));
  std::rotate(letters.begin(), letters.begin() + cut, letters.end());
  letters.pop_back();
}

/// Uniform arrangement of n up-steps among 3n+1 letters, by selection
/// sampling: place each up-step with probability (ups left) over (positions
/// left), which makes every arrangement equally likely.
std::string sample_arrangement(int n, Rng& rng) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  const std::size_t length = static_cast<std::size_t>(3) * n + 1;
  std::string letters(length, 'a');
  std::uint64_t ups_left = static_cast<std::uint64_t>(n);
  std::uint64_t positions_left = length;
  for (std::size_t k = 0; ups_left > 0; ++k, --positions_left) {
    if (rng.below(positions_left) < ups_left) {
      letters[k] = 'c';
      --ups_left;
    }
  }
  return letters;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("below(0) is undefined");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  // Discard the top partial block so every residue is equally likely.
  const std::uint64_t rem = (max % n + 1) % n;
  while (true) {
    const std::uint64_t x = next();
    if (x <= max - rem) return x % n;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + index * 0x9e3779b97f4a7c15ull);
}

ProjectedWalk balance_arrangement(std::string_view letters) {
  const std::size_t length = letters.size();
  std::int64_t ups = 0;
  for (char ch : letters) {
    if (ch == 'c') ++ups;
    else if (ch != 'a') throw std::invalid_argument("arrangement: letters must be over {a, c}");
  }
  if (static_cast<std::int64_t>(length) != 3 * ups + 1)
    throw std::invalid_argument("arrangement: need 2n+1 down-steps for n up-steps");

  std::string word(letters);
  cut_at_first_minimum(word);
  return ProjectedWalk(std::move(word));
}

ProjectedWalk sample_projected(int n, Rng& rng) {
  std::string letters = sample_arrangement(n, rng);
  cut_at_first_minimum(letters);
  return ProjectedWalk(std::move(letters));
}

Walk sample_excursion(int n, Rng& rng) {
  std::string letters = sample_arrangement(n, rng);
  cut_at_first_minimum(letters);
  for (char& c : letters) {
    if (c != 'c') c = rng.coin() ? 'b' : 'a';
  }
  return Walk::parse(letters);
}

SampledMap sample_map(SampleTarget target, int n, Rng& rng) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  if ((target == SampleTarget::cubic || target == SampleTarget::triangulation) && n < 1) {
    throw std::invalid_argument("cubic and triangulation targets need size at least 1");
  }
  const Walk w = sample_excursion(n, rng);
  MarkedDepthMap image = walk_to_map(w, 0);
  switch (target) {
    case SampleTarget::marked_depth:
      return {std::move(image.map), std::move(image.tree), image.marked};
    case SampleTarget::near_cubic:
      return {std::move(image.map), std::nullopt, std::nullopt};
    case SampleTarget::cubic:
      return {near_cubic_to_cubic(image.map), std::nullopt, std::nullopt};
    case SampleTarget::triangulation:
      return {dual(near_cubic_to_cubic(image.map)), std::nullopt, std::nullopt};
  }
  throw std::invalid_argument("unknown sample target");
}

std::string_view to_string(SampleTarget target) {
  switch (target) {
    case SampleTarget::marked_depth:
      return "marked_depth";
    case SampleTarget::near_cubic:
      return "near_cubic";
    case SampleTarget::cubic:
      return "cubic";
    case SampleTarget::triangulation:
      return "triangulation";
  }
  return "unknown";
}

std::optional<SampleTarget> sample_target_from_string(std::string_view name) {
  if (name == "marked_depth") return SampleTarget::marked_depth;
  if (name == "near_cubic") return SampleTarget::near_cubic;
  if (name == "cubic") return SampleTarget::cubic;
  if (name == "triangulation") return SampleTarget::triangulation;
  return std::nullopt;
}

}  // namespace kreweras
