#pragma once

#include <optional>
#include <string>
#include <utility>

#include "kreweras/planar_map.hpp"
#include "kreweras/spanning_tree.hpp"

namespace kreweras {

/// Dual map: faces become vertices. The half-edge set and alpha are shared;
/// the dual rotation is the face-tour successor. dual(dual(m)) == m exactly.
/// Requires a closed map.
PlanarMap dual(const PlanarMap& m);

/// Subdivides the root-edge of a cubic map with a new degree-2 vertex and
/// roots the result there, yielding a 2-near-cubic map one size larger.
PlanarMap cubic_to_near_cubic(const PlanarMap& m);

/// Contracts the degree-2 root-vertex of a 2-near-cubic map, welding its two
/// edges into the root-edge of a cubic map one size smaller. The loop map has
/// no image and is rejected.
PlanarMap near_cubic_to_cubic(const PlanarMap& m);

/// Tree-transporting versions. The 2-near-cubic tree must contain the
/// non-root edge at the root-vertex and not the root-edge, which is exactly
/// the shape of a depth tree there; depth trees map to depth trees.
std::pair<PlanarMap, SpanningTree> cubic_to_near_cubic(const PlanarMap& m,
                                                       const SpanningTree& t);
std::pair<PlanarMap, SpanningTree> near_cubic_to_cubic(const PlanarMap& m,
                                                       const SpanningTree& t);

struct CodeDecorations {
  const SpanningTree* tree = nullptr;
  std::optional<EdgeId> marked;
};

/// Canonical byte string of the rooted map with its decorations: half-edges
/// are relabeled by first visit of a deterministic traversal from the root
/// that alternates sigma and alpha, so equal codes mean equal rooted maps.
std::string canonical_code(const PlanarMap& m, const CodeDecorations& deco = {});

struct DecodedMap {
  PlanarMap map;
  std::optional<SpanningTree> tree;
  std::optional<EdgeId> marked;
};

/// Rebuilds the map (and decorations) serialized by canonical_code.
DecodedMap decode_canonical(const std::string& code);

}  // namespace kreweras
