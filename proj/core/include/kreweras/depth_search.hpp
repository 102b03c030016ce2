#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "kreweras/planar_map.hpp"
#include "kreweras/spanning_tree.hpp"

namespace kreweras {

/// Undirected multigraph with loops, with caller-chosen edge ids. Built from a
/// map it keeps the map's edge ids, so trees can be compared across both views.
class MultiGraph {
public:
  static MultiGraph from_map(const PlanarMap& m);
  /// Edge ids are taken to be 0..endpoints.size()-1.
  static MultiGraph from_edges(std::uint32_t vertex_count,
                               const std::vector<std::pair<VertexId, VertexId>>& endpoints);

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(incident_.size()); }
  std::size_t edge_count() const { return ids_.size(); }
  const std::vector<EdgeId>& edge_ids() const { return ids_; }
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  /// Incident edge ids in ascending order; a loop appears twice.
  const std::vector<EdgeId>& incident(VertexId v) const { return incident_[v]; }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(incident_[v].size());
  }
  /// Endpoint of e other than v (v itself for a loop).
  VertexId other(EdgeId e, VertexId v) const;
  bool connected() const;

private:
  std::vector<EdgeId> ids_;                                // ascending
  std::vector<std::pair<VertexId, VertexId>> endpoints_;   // parallel to ids_
  std::vector<std::uint32_t> index_of_;                    // edge id -> position
  std::vector<std::vector<EdgeId>> incident_;
};

/// True when x and y lie in one component of the subgraph induced by the
/// vertices flagged in in_u (both must be flagged).
bool u_connected(const MultiGraph& g, const std::vector<char>& in_u, VertexId x, VertexId y);

/// Nature of a descent during the search, judged at the moment of the choice:
/// alpha: at most one edge was available, so nothing was chosen;
/// beta:  two edges whose far endpoints are connected through unvisited
///        vertices — the choice changes the resulting tree;
/// gamma: two edges whose far endpoints are not so connected — the two
///        exploration orders produce the same tree.
enum class ChoiceCase { alpha, beta, gamma };

struct ChoiceRecord {
  VertexId at = 0;
  std::vector<EdgeId> eligible;  // ascending
  EdgeId chosen = 0;
  std::optional<ChoiceCase> kind;  // absent when more than two edges were available
};

struct DfsState {
  VertexId current = 0;
  std::vector<char> visited;     // by vertex
  std::vector<EdgeId> tree;      // in traversal order
  std::vector<ChoiceRecord> trace;
};

/// Picks the index of the edge to descend along among the eligible ones.
/// Consulted only when at least two are eligible.
using Chooser = std::function<std::size_t(const DfsState&, const std::vector<EdgeId>&)>;

/// Depth-first search from v0: descend along an edge to an unvisited vertex
/// while one exists, otherwise step back toward v0; stop when back at v0 with
/// nothing eligible. Returns the tree of descent edges. The graph must be
/// connected. final_state, when given, receives the full trace.
SpanningTree dfs_tree(const MultiGraph& g, VertexId v0, const Chooser& chooser = {},
                      DfsState* final_state = nullptr);

struct DfsRun {
  SpanningTree tree;
  std::vector<ChoiceRecord> trace;
};

struct DfsEnumeration {
  std::vector<SpanningTree> trees;  // distinct results, ascending
  std::vector<DfsRun> runs;         // one per choice sequence
};

/// Runs every depth-first search from v0 whose first descent uses e0, over all
/// ways of resolving the choice points. Requires a loopless connected graph in
/// which every vertex but v0 has degree 3, still connected once v0 is deleted,
/// and e0 at v0. Checks the expected structure of the results: each tree
/// touches v0 only through e0, and the number of distinct trees is exactly
/// 2^(E - V - deg(v0) + 2).
DfsEnumeration enumerate_dfs_trees_through(const MultiGraph& g, VertexId v0, EdgeId e0);

/// All depth trees of a closed 2-near-cubic map, by depth-first search from
/// the root-vertex through its non-root edge. The one-edge loop map yields
/// the single empty tree.
std::vector<SpanningTree> enumerate_depth_trees(const PlanarMap& m);

}  // namespace kreweras
