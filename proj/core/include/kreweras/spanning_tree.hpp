#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "kreweras/planar_map.hpp"

namespace kreweras {

/// Set of edge ids, kept sorted. Used both for spanning trees of maps and of
/// plain multigraphs; the id space is whatever the producer used.
class SpanningTree {
public:
  SpanningTree() = default;
  explicit SpanningTree(std::vector<EdgeId> edges);

  const std::vector<EdgeId>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool contains(EdgeId e) const;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
  friend auto operator<=>(const SpanningTree& x, const SpanningTree& y) {
    return x.edges_ <=> y.edges_;
  }

private:
  std::vector<EdgeId> edges_;
};

/// Ancestry queries for a spanning tree of a map, rooted at the root-vertex.
///
/// Construction checks that the edges form a spanning tree and orients it from
/// the root-vertex. The map must outlive the query object.
class TreeQueries {
public:
  TreeQueries(const PlanarMap& m, const SpanningTree& t);

  VertexId parent(VertexId v) const { return parent_[v]; }
  std::uint32_t depth(VertexId v) const { return depth_[v]; }

  /// True when u lies on the tree path from the root-vertex to v (u = v included).
  bool is_ancestor(VertexId u, VertexId v) const;

  /// Vertices of the tree path from u to v, both included.
  std::vector<VertexId> tree_path(VertexId u, VertexId v) const;

  /// A depth tree has every external edge joining comparable vertices, and
  /// when the root half-edge is paired its edge must be external.
  bool is_depth_tree() const;

private:
  const PlanarMap* map_;
  std::vector<char> in_tree_;  // by smaller half-edge id
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> depth_;
};

}  // namespace kreweras
