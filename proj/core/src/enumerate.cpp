#include "kreweras/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace kreweras {

namespace {

constexpr int kMaxLength = 21;

// Quarter-plane words with prescribed letter totals; the prefix conditions
// |w'|_a <= |w'|_c and |w'|_b <= |w'|_c characterize Kreweras walks, and with
// totals (n, n+i, n+i) the endpoint is (i, 0).
void list_quarter_plane(std::int64_t ta, std::int64_t tb, std::int64_t tc,
                        std::int64_t pa, std::int64_t pb, std::int64_t pc,
                        std::string& word, std::vector<Walk>& out) {
  if (pa == ta && pb == tb && pc == tc) {
    out.push_back(Walk::parse(word));
    return;
  }
  if (pa < ta && pa + 1 <= pc) {
    word.push_back('a');
    list_quarter_plane(ta, tb, tc, pa + 1, pb, pc, word, out);
    word.pop_back();
  }
  if (pb < tb && pb + 1 <= pc) {
    word.push_back('b');
    list_quarter_plane(ta, tb, tc, pa, pb + 1, pc, word, out);
    word.pop_back();
  }
  if (pc < tc) {
    word.push_back('c');
    list_quarter_plane(ta, tb, tc, pa, pb, pc + 1, word, out);
    word.pop_back();
  }
}

// Half-plane words of length 3n ending on i+j = 0. `deficit` is
// 2|w'|_c - |w'|_a - |w'|_b, which must stay nonnegative and end at zero;
// `remaining` counts letters still to place.
void list_excursions(std::int64_t remaining, std::int64_t deficit, std::string& word,
                     std::vector<Walk>& out) {
  if (remaining == 0) {
    out.push_back(Walk::parse(word));
    return;
  }
  if (deficit >= 1) {
    word.push_back('a');
    list_excursions(remaining - 1, deficit - 1, word, out);
    word.pop_back();
    word.push_back('b');
    list_excursions(remaining - 1, deficit - 1, word, out);
    word.pop_back();
  }
  if (remaining >= deficit + 3) {
    word.push_back('c');
    list_excursions(remaining - 1, deficit + 2, word, out);
    word.pop_back();
  }
}

}  // namespace

std::vector<Walk> enumerate_walks(WalkFamily family, int n, std::optional<int> i) {
  if (n < 0) throw std::invalid_argument("enumerate: n must be nonnegative");
  const bool wants_i = family == WalkFamily::kreweras_to;
  if (wants_i && !i)
    throw std::invalid_argument("enumerate: this family requires the endpoint parameter i");
  if (!wants_i && i)
    throw std::invalid_argument("enumerate: this family does not take the endpoint parameter i");
  if (wants_i && *i < 0) throw std::invalid_argument("enumerate: i must be nonnegative");

  const int shift = wants_i ? *i : 0;
  const int length = 3 * n + 2 * shift;
  if (length > kMaxLength)
    throw std::invalid_argument("enumerate: word length exceeds the tractability guard of 21");

  std::vector<Walk> out;
  std::string word;
  word.reserve(length);
  switch (family) {
    case WalkFamily::kreweras_origin:
      list_quarter_plane(n, n, n, 0, 0, 0, word, out);
      break;
    case WalkFamily::kreweras_to:
      list_quarter_plane(n, n + shift, n + shift, 0, 0, 0, word, out);
      break;
    case WalkFamily::excursion:
      list_excursions(length, 0, word, out);
      break;
  }
  return out;
}

std::string_view to_string(WalkFamily family) {
  switch (family) {
    case WalkFamily::kreweras_origin: return "kreweras_origin";
    case WalkFamily::excursion: return "excursion";
    case WalkFamily::kreweras_to: return "kreweras_to";
  }
  return "unknown";
}

std::optional<WalkFamily> walk_family_from_string(std::string_view name) {
  if (name == "kreweras_origin") return WalkFamily::kreweras_origin;
  if (name == "excursion") return WalkFamily::excursion;
  if (name == "kreweras_to") return WalkFamily::kreweras_to;
  return std::nullopt;
}

}  // namespace kreweras
