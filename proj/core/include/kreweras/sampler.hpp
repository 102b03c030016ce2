#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "kreweras/planar_map.hpp"
#include "kreweras/spanning_tree.hpp"
#include "kreweras/walk.hpp"

namespace kreweras {

/// Deterministic random source. The engine is mt19937_64, whose output
/// sequence is fixed by the standard, so a seed pins results across
/// platforms; below() uses rejection to stay exactly uniform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform value in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return (next() & 1) != 0; }

private:
  std::mt19937_64 engine_;
};

/// Stable per-item seed stream: mixes a base seed with an item index so that
/// batch generation neither reuses nor correlates engine states.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// The balancing rotation: given any arrangement of n up-steps 'c' and 2n+1
/// down-steps 'a', cut the cycle just after the first position where the
/// running sum attains its minimum and drop the letter at the cut. The result
/// is a nonnegative word from 0 back to 0, and every such word is produced by
/// exactly 3n+1 of the arrangements.
ProjectedWalk balance_arrangement(std::string_view letters);

/// Uniform nonnegative +2/-1 word with n up-steps, by the balancing rotation
/// of a uniform arrangement of n up and 2n+1 down steps. Linear time.
ProjectedWalk sample_projected(int n, Rng& rng);

/// Uniform excursion of size n: a sampled projection whose 2n down steps are
/// resolved by fair coins.
Walk sample_excursion(int n, Rng& rng);

enum class SampleTarget {
  marked_depth,   ///< map with depth tree and marked edge, uniform over those
  near_cubic,     ///< bare bridgeless 2-near-cubic map of size n
  cubic,          ///< bare bridgeless cubic map with 3n edges (n >= 1)
  triangulation,  ///< loopless triangulation: the dual of the cubic target
};

struct SampledMap {
  PlanarMap map;
  std::optional<SpanningTree> tree;
  std::optional<EdgeId> marked;
};

/// Uniform sample of the requested family at size n. Uniformity of the bare
/// targets follows from the decorated fibers all having equal size.
SampledMap sample_map(SampleTarget target, int n, Rng& rng);

std::string_view to_string(SampleTarget target);
std::optional<SampleTarget> sample_target_from_string(std::string_view name);

}  // namespace kreweras
