#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "kreweras/planar_map.hpp"
#include "kreweras/spanning_tree.hpp"
#include "kreweras/walk.hpp"

namespace kreweras {

/// Map under construction: carries legs (the head among them) and the partial
/// spanning tree accumulated so far. The tree holds one edge per non-root
/// vertex, always the edge through which that vertex was created.
struct TreeGrowingMap {
  PlanarMap map;
  SpanningTree tree;
};

/// Closed output of the correspondence: a non-separable (target+2)-near-cubic
/// rooted map together with a depth tree and a marked external edge.
struct MarkedDepthMap {
  PlanarMap map;
  SpanningTree tree;
  EdgeId marked = 0;
  std::uint32_t target = 0;  ///< the walk family ends at (target, 0)
};

/// Start state for walks ending at (target, 0): a single vertex carrying the
/// root leg, the head, and `target` further legs, with an empty tree.
TreeGrowingMap seed_map(std::uint32_t target);

/// One forward step. 'a' and 'b' sprout a new vertex at the head (the fresh
/// outer leg lands first resp. last on the head-face tour); 'c' pairs the head
/// with the outer leg whose endpoint is the shallower of the two, and the
/// other outer leg becomes the head. Throws std::invalid_argument when the
/// step does not apply.
TreeGrowingMap grow(const TreeGrowingMap& g, char letter);

/// Glues the head to the last remaining leg; that edge becomes the mark.
MarkedDepthMap close_map(const TreeGrowingMap& g);

/// Cuts the marked edge open again; the head is the half on the deeper
/// endpoint (for the one-edge loop map, the non-root half).
TreeGrowingMap open_map(const MarkedDepthMap& m);

/// One reverse step, when the state is readable: undoes the unique forward
/// step that can have produced it and returns the letter. nullopt when no
/// step applies (in particular at every seed).
std::optional<std::pair<char, TreeGrowingMap>> read_step(const TreeGrowingMap& g);

/// Whole forward correspondence, in time linear in the walk length. With
/// target 0 the walk may be any excursion; the mark then lands on the
/// root-edge exactly when the walk also stays in the quarter plane. With
/// target i > 0 the walk must be a quarter-plane walk ending at (i, 0).
MarkedDepthMap walk_to_map(const Walk& w, std::uint32_t target = 0);

/// Whole reverse correspondence; inverse of walk_to_map. Throws
/// std::invalid_argument when the input fails validation or does not replay
/// back to the seed.
Walk map_to_walk(const MarkedDepthMap& m);

/// Checks every structural requirement of a MarkedDepthMap: closed,
/// (target+2)-near-cubic, non-separable, depth tree, marked edge external,
/// marked endpoints distinct except in the one-edge loop map. Throws
/// std::invalid_argument with a reason on the first failure.
void validate_marked_depth_map(const MarkedDepthMap& m);

}  // namespace kreweras
