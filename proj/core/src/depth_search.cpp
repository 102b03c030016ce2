#include "kreweras/depth_search.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace kreweras {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

// Vertices of the subgraph induced by `flag` reachable from start (itself
// flagged), counted by breadth-first search.
std::uint32_t flagged_reach(const MultiGraph& g, const std::vector<char>& flag,
                            VertexId start, std::vector<char>& seen) {
  seen.assign(g.vertex_count(), 0);
  std::vector<VertexId> queue{start};
  seen[start] = 1;
  std::uint32_t found = 1;
  while (!queue.empty()) {
    const VertexId v = queue.back();
    queue.pop_back();
    for (EdgeId e : g.incident(v)) {
      const VertexId w = g.other(e, v);
      if (flag[w] && !seen[w]) {
        seen[w] = 1;
        ++found;
        queue.push_back(w);
      }
    }
  }
  return found;
}

}  // namespace

MultiGraph MultiGraph::from_map(const PlanarMap& m) {
  MultiGraph g;
  g.incident_.resize(m.vertex_count());
  g.ids_ = m.edges();
  std::sort(g.ids_.begin(), g.ids_.end());
  g.endpoints_.reserve(g.ids_.size());
  const EdgeId max_id = g.ids_.empty() ? 0 : g.ids_.back();
  g.index_of_.assign(max_id + 1, kUnset);
  for (std::size_t k = 0; k < g.ids_.size(); ++k) {
    const EdgeId e = g.ids_[k];
    g.index_of_[e] = static_cast<std::uint32_t>(k);
    const auto [u, v] = m.endpoints(e);
    g.endpoints_.emplace_back(u, v);
    g.incident_[u].push_back(e);
    g.incident_[v].push_back(e);
  }
  return g;
}

MultiGraph MultiGraph::from_edges(
    std::uint32_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& endpoints) {
  MultiGraph g;
  g.incident_.resize(vertex_count);
  g.endpoints_ = endpoints;
  g.ids_.resize(endpoints.size());
  g.index_of_.resize(endpoints.size());
  for (std::size_t k = 0; k < endpoints.size(); ++k) {
    const auto [u, v] = endpoints[k];
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    const EdgeId e = static_cast<EdgeId>(k);
    g.ids_[k] = e;
    g.index_of_[k] = static_cast<std::uint32_t>(k);
    g.incident_[u].push_back(e);
    g.incident_[v].push_back(e);
  }
  return g;
}

std::pair<VertexId, VertexId> MultiGraph::endpoints(EdgeId e) const {
  if (e >= index_of_.size() || index_of_[e] == kUnset) {
    throw std::invalid_argument("unknown edge id");
  }
  return endpoints_[index_of_[e]];
}

VertexId MultiGraph::other(EdgeId e, VertexId v) const {
  const auto [a, b] = endpoints(e);
  if (a == v) return b;
  if (b == v) return a;
  throw std::invalid_argument("edge is not incident to the given vertex");
}

bool MultiGraph::connected() const {
  if (vertex_count() == 0) return true;
  std::vector<char> all(vertex_count(), 1);
  std::vector<char> seen;
  return flagged_reach(*this, all, 0, seen) == vertex_count();
}

bool u_connected(const MultiGraph& g, const std::vector<char>& in_u, VertexId x, VertexId y) {
  if (x >= g.vertex_count() || y >= g.vertex_count()) {
    throw std::invalid_argument("vertex out of range");
  }
  if (!in_u[x] || !in_u[y]) return false;
  if (x == y) return true;
  std::vector<char> seen;
  flagged_reach(g, in_u, x, seen);
  return seen[y] != 0;
}

SpanningTree dfs_tree(const MultiGraph& g, VertexId v0, const Chooser& chooser,
                      DfsState* final_state) {
  if (v0 >= g.vertex_count()) throw std::invalid_argument("start vertex out of range");
  DfsState st;
  st.current = v0;
  st.visited.assign(g.vertex_count(), 0);
  st.visited[v0] = 1;
  std::vector<VertexId> path{v0};

  while (true) {
    std::vector<EdgeId> eligible;
    for (EdgeId e : g.incident(st.current)) {
      if (!st.visited[g.other(e, st.current)]) eligible.push_back(e);
    }
    // A loop is listed twice among the incident edges but its far endpoint is
    // the (visited) current vertex, so it never enters the eligible list;
    // every other incident edge appears exactly once.
    if (eligible.empty()) {
      if (st.current == v0) break;
      path.pop_back();
      st.current = path.back();
      continue;
    }
    std::size_t idx = 0;
    if (eligible.size() >= 2 && chooser) {
      idx = chooser(st, eligible);
      if (idx >= eligible.size()) {
        throw std::invalid_argument("chooser returned an out-of-range index");
      }
    }
    ChoiceRecord rec;
    rec.at = st.current;
    rec.chosen = eligible[idx];
    if (eligible.size() <= 1) {
      rec.kind = ChoiceCase::alpha;
    } else if (eligible.size() == 2) {
      std::vector<char> unvisited(g.vertex_count());
      for (VertexId v = 0; v < g.vertex_count(); ++v) unvisited[v] = !st.visited[v];
      const VertexId x = g.other(eligible[0], st.current);
      const VertexId y = g.other(eligible[1], st.current);
      rec.kind = u_connected(g, unvisited, x, y) ? ChoiceCase::beta : ChoiceCase::gamma;
    }
    rec.eligible = std::move(eligible);
    const VertexId next = g.other(rec.chosen, st.current);
    st.trace.push_back(std::move(rec));
    st.visited[next] = 1;
    st.tree.push_back(st.trace.back().chosen);
    st.current = next;
    path.push_back(next);
  }

  for (char f : st.visited) {
    if (!f) throw std::invalid_argument("graph is not connected");
  }
  SpanningTree out(st.tree);
  if (final_state) *final_state = std::move(st);
  return out;
}

DfsEnumeration enumerate_dfs_trees_through(const MultiGraph& g, VertexId v0, EdgeId e0) {
  const std::uint32_t v_count = g.vertex_count();
  if (v0 >= v_count) throw std::invalid_argument("start vertex out of range");
  for (EdgeId e : g.edge_ids()) {
    const auto [u, w] = g.endpoints(e);
    if (u == w) throw std::invalid_argument("graph must be loopless");
  }
  if (!g.connected()) throw std::invalid_argument("graph must be connected");
  for (VertexId v = 0; v < v_count; ++v) {
    if (v != v0 && g.degree(v) != 3) {
      throw std::invalid_argument("every vertex but the start must have degree 3");
    }
  }
  {
    const auto [u, w] = g.endpoints(e0);
    if (u != v0 && w != v0) {
      throw std::invalid_argument("the forced edge must touch the start vertex");
    }
  }
  if (v_count >= 3) {
    std::vector<char> keep(v_count, 1);
    keep[v0] = 0;
    std::vector<char> seen;
    const VertexId elsewhere = v0 == 0 ? 1 : 0;
    if (flagged_reach(g, keep, elsewhere, seen) != v_count - 1) {
      throw std::invalid_argument("graph must stay connected without the start vertex");
    }
  }
  const std::uint32_t k = g.degree(v0);
  const std::int64_t n =
      static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(v_count) - k + 2;
  if (n < 0) throw std::invalid_argument("edge and vertex counts are inconsistent");
  if (n > 20) throw std::invalid_argument("too many choice sequences to enumerate");

  DfsEnumeration out;
  std::set<SpanningTree> distinct;
  std::vector<std::size_t> prefix;
  while (true) {
    bool forced_done = k < 2;  // with a single edge at v0 there is nothing to force
    std::size_t counter = 0;
    const Chooser chooser = [&](const DfsState&,
                                const std::vector<EdgeId>& eligible) -> std::size_t {
      if (!forced_done) {
        forced_done = true;
        const auto it = std::find(eligible.begin(), eligible.end(), e0);
        if (it == eligible.end()) {
          throw std::logic_error("forced first edge is not eligible at the start");
        }
        return static_cast<std::size_t>(it - eligible.begin());
      }
      const std::size_t idx = counter < prefix.size() ? prefix[counter] : 0;
      ++counter;
      return idx;
    };
    DfsState st;
    SpanningTree tree = dfs_tree(g, v0, chooser, &st);
    distinct.insert(tree);

    std::vector<std::pair<std::size_t, std::size_t>> decisions;  // (picked, options)
    for (std::size_t r = 0; r < st.trace.size(); ++r) {
      const ChoiceRecord& rec = st.trace[r];
      if (rec.eligible.size() < 2) continue;
      if (r == 0 && k >= 2) continue;  // the forced first descent
      const auto it = std::find(rec.eligible.begin(), rec.eligible.end(), rec.chosen);
      decisions.emplace_back(static_cast<std::size_t>(it - rec.eligible.begin()),
                             rec.eligible.size());
    }
    out.runs.push_back({std::move(tree), std::move(st.trace)});

    std::size_t keep = decisions.size();
    while (keep > 0 && decisions[keep - 1].first + 1 >= decisions[keep - 1].second) --keep;
    if (keep == 0) break;
    prefix.clear();
    for (std::size_t r = 0; r + 1 < keep; ++r) prefix.push_back(decisions[r].first);
    prefix.push_back(decisions[keep - 1].first + 1);
  }

  out.trees.assign(distinct.begin(), distinct.end());
  if (out.trees.size() != (std::size_t{1} << n)) {
    throw std::logic_error("unexpected number of distinct search trees");
  }
  for (const SpanningTree& t : out.trees) {
    std::size_t at_start = 0;
    for (EdgeId e : t.edges()) {
      const auto [a, b] = g.endpoints(e);
      if (a == v0 || b == v0) ++at_start;
    }
    if (at_start != 1 || !t.contains(e0)) {
      throw std::logic_error("search tree does not reach the start vertex through the forced edge only");
    }
  }
  return out;
}

std::vector<SpanningTree> enumerate_depth_trees(const PlanarMap& m) {
  if (!m.closed()) throw std::invalid_argument("depth trees require a closed map");
  const VertexId rv = m.root_vertex();
  if (m.degree(rv) != 2) {
    throw std::invalid_argument("depth tree listing requires a 2-near-cubic map");
  }
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    if (v != rv && m.degree(v) != 3) {
      throw std::invalid_argument("depth tree listing requires a 2-near-cubic map");
    }
  }
  if (m.edge_count() == 1) return {SpanningTree{}};
  const EdgeId branch = m.edge_of(m.sigma(m.root()));
  const MultiGraph g = MultiGraph::from_map(m);
  return enumerate_dfs_trees_through(g, rv, branch).trees;
}

}  // namespace kreweras
