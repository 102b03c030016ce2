#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kreweras/planar_map.hpp"
#include "kreweras/spanning_tree.hpp"

namespace kreweras {

/// JSON object with fields H, sigma, alpha (legs as -1), root, head (null when
/// closed), tree (null when absent), marked (null when absent).
std::string map_to_json(const PlanarMap& m, const SpanningTree* tree = nullptr,
                        std::optional<EdgeId> marked = std::nullopt);

struct ParsedMap {
  PlanarMap map;
  std::optional<SpanningTree> tree;
  std::optional<EdgeId> marked;
};

/// Parses and fully validates the format written by map_to_json.
/// Throws std::invalid_argument on malformed input.
ParsedMap map_from_json(std::string_view text);

/// Graphviz rendering: vertices as circles (the root-vertex doubled), edges
/// labeled by id, tree edges thick, the marked edge dashed, the root half-edge
/// as an arrow from an external stub, legs as dotted stubs with the head
/// labeled.
std::string map_to_dot(const PlanarMap& m, const SpanningTree* tree = nullptr,
                       std::optional<EdgeId> marked = std::nullopt);

}  // namespace kreweras
