#include "kreweras/spanning_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace kreweras {

SpanningTree::SpanningTree(std::vector<EdgeId> edges) : edges_(std::move(edges)) {
  if (!std::is_sorted(edges_.begin(), edges_.end()))
    std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("spanning tree: duplicate edge id");
}

bool SpanningTree::contains(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

TreeQueries::TreeQueries(const PlanarMap& m, const SpanningTree& t) : map_(&m) {
  const std::uint32_t V = m.vertex_count();
  if (t.size() != V - 1)
    throw std::invalid_argument("tree queries: edge count differs from V - 1");

  in_tree_.assign(m.half_edge_count(), 0);
  std::vector<std::vector<std::pair<VertexId, VertexId>>> adj(V);  // (neighbor, edge)
  for (EdgeId e : t.edges()) {
    const auto [u, w] = m.endpoints(e);  // validates the id
    if (u == w) throw std::invalid_argument("tree queries: tree contains a loop");
    in_tree_[e] = 1;
    adj[u].push_back({w, e});
    adj[w].push_back({u, e});
  }

  parent_.assign(V, 0);
  depth_.assign(V, 0);
  std::vector<char> visited(V, 0);
  const VertexId r = m.root_vertex();
  parent_[r] = r;
  visited[r] = 1;
  std::vector<VertexId> queue{r};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const VertexId v = queue[q];
    for (const auto& [next, e] : adj[v]) {
      if (visited[next]) continue;
      visited[next] = 1;
      parent_[next] = v;
      depth_[next] = depth_[v] + 1;
      queue.push_back(next);
    }
  }
  if (queue.size() != V)
    throw std::invalid_argument("tree queries: edges do not span the map");
}

bool TreeQueries::is_ancestor(VertexId u, VertexId v) const {
  while (depth_[v] > depth_[u]) v = parent_[v];
  return u == v;
}

std::vector<VertexId> TreeQueries::tree_path(VertexId u, VertexId v) const {
  std::vector<VertexId> from_u{u};
  std::vector<VertexId> from_v{v};
  VertexId x = u, y = v;
  while (depth_[x] > depth_[y]) from_u.push_back(x = parent_[x]);
  while (depth_[y] > depth_[x]) from_v.push_back(y = parent_[y]);
  while (x != y) {
    from_u.push_back(x = parent_[x]);
    from_v.push_back(y = parent_[y]);
  }
  from_u.pop_back();  // drop the meeting vertex from one side
  from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
  return from_u;
}

bool TreeQueries::is_depth_tree() const {
  const PlanarMap& m = *map_;
  for (EdgeId e : m.edges()) {
    if (in_tree_[e]) continue;
    const auto [u, w] = m.endpoints(e);
    if (!is_ancestor(u, w) && !is_ancestor(w, u)) return false;
  }
  if (!m.is_leg(m.root()) && in_tree_[m.edge_of(m.root())]) return false;
  return true;
}

}  // namespace kreweras
