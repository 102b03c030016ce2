#include "kreweras/planar_map.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kreweras {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("planar map: " + what);
}

}  // namespace

PlanarMap PlanarMap::make(std::vector<HalfEdge> sigma, std::vector<std::int32_t> alpha,
                          HalfEdge root, std::optional<HalfEdge> head) {
  const std::size_t H = sigma.size();
  if (H == 0) fail("no half-edges");
  if (alpha.size() != H) fail("sigma and alpha sizes differ");
  if (root >= H) fail("root out of range");
  if (head && *head >= H) fail("head out of range");

  std::vector<char> scratch(H, 0);  // reused by every marking pass below
  std::uint32_t legs = 0;
  for (HalfEdge h = 0; h < H; ++h) {
    if (sigma[h] >= H) fail("sigma out of range");
    if (scratch[sigma[h]]) fail("sigma is not a permutation");
    scratch[sigma[h]] = 1;
    const std::int32_t p = alpha[h];
    if (p < 0) {
      ++legs;
      continue;
    }
    if (static_cast<std::size_t>(p) >= H) fail("alpha out of range");
    if (p == static_cast<std::int32_t>(h)) fail("alpha has a fixed point");
    if (alpha[p] != static_cast<std::int32_t>(h)) fail("alpha is not an involution");
  }

  PlanarMap m;
  m.sigma_ = std::move(sigma);
  m.alpha_ = std::move(alpha);
  m.root_ = root;
  m.head_ = head;
  m.leg_count_ = legs;
  m.edge_count_ = static_cast<std::uint32_t>((H - legs) / 2);

  // vertices: sigma-cycles in order of their smallest half-edge
  m.vertex_of_.assign(H, 0);
  std::vector<char>& seen = scratch;
  std::fill(seen.begin(), seen.end(), 0);
  for (HalfEdge h = 0; h < H; ++h) {
    if (seen[h]) continue;
    const VertexId v = static_cast<VertexId>(m.degree_.size());
    std::uint32_t deg = 0;
    for (HalfEdge k = h; !seen[k]; k = m.sigma_[k]) {
      seen[k] = 1;
      m.vertex_of_[k] = v;
      ++deg;
    }
    m.degree_.push_back(deg);
  }

  // connectivity under <sigma, alpha>
  std::vector<char>& reached = scratch;
  std::fill(reached.begin(), reached.end(), 0);
  std::vector<HalfEdge> stack{m.root_};
  reached[m.root_] = 1;
  std::size_t reach_count = 0;
  while (!stack.empty()) {
    const HalfEdge h = stack.back();
    stack.pop_back();
    ++reach_count;
    const HalfEdge s = m.sigma_[h];
    if (!reached[s]) {
      reached[s] = 1;
      stack.push_back(s);
    }
    if (m.alpha_[h] >= 0) {
      const HalfEdge p = static_cast<HalfEdge>(m.alpha_[h]);
      if (!reached[p]) {
        reached[p] = 1;
        stack.push_back(p);
      }
    }
  }
  if (reach_count != H) fail("map is not connected");

  // faces: orbits of the face-tour successor
  std::fill(seen.begin(), seen.end(), 0);
  for (HalfEdge h = 0; h < H; ++h) {
    if (seen[h]) continue;
    ++m.face_count_;
    for (HalfEdge k = h; !seen[k]; k = m.face_next(k)) seen[k] = 1;
  }

  if (legs > 0) {
    if (!m.head_) fail("map has untracked legs: a head must be declared");
    if (!m.is_leg(*m.head_)) fail("head is not a leg");
    // every leg must lie on the head-face
    std::uint32_t legs_on_head_face = 0;
    HalfEdge k = *m.head_;
    do {
      if (m.is_leg(k)) ++legs_on_head_face;
      k = m.face_next(k);
    } while (k != *m.head_);
    if (legs_on_head_face != legs) fail("a leg lies outside the head-face");
  } else {
    if (m.head_) fail("head declared on a closed map");
    // genus check for closed maps only
    const std::int64_t euler = static_cast<std::int64_t>(m.vertex_count()) -
                               static_cast<std::int64_t>(m.edge_count_) +
                               static_cast<std::int64_t>(m.face_count_);
    if (euler != 2) fail("rotation system has nonzero genus");
  }

  return m;
}

PlanarMap PlanarMap::make_unchecked(std::vector<HalfEdge> sigma,
                                    std::vector<std::int32_t> alpha, HalfEdge root,
                                    std::optional<HalfEdge> head,
                                    std::vector<VertexId> vertex_of,
                                    std::vector<std::uint32_t> degree,
                                    std::uint32_t leg_count, std::uint32_t face_count) {
  PlanarMap m;
  const std::size_t H = sigma.size();
  m.sigma_ = std::move(sigma);
  m.alpha_ = std::move(alpha);
  m.root_ = root;
  m.head_ = head;
  m.vertex_of_ = std::move(vertex_of);
  m.degree_ = std::move(degree);
  m.leg_count_ = leg_count;
  m.edge_count_ = static_cast<std::uint32_t>((H - leg_count) / 2);
  m.face_count_ = face_count;
  return m;
}

EdgeId PlanarMap::edge_of(HalfEdge h) const {
  if (is_leg(h)) throw std::invalid_argument("edge_of: half-edge is a leg");
  return std::min(h, partner(h));
}

std::vector<EdgeId> PlanarMap::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count_);
  for (HalfEdge h = 0; h < half_edge_count(); ++h)
    if (alpha_[h] > static_cast<std::int32_t>(h)) out.push_back(h);
  return out;
}

std::pair<VertexId, VertexId> PlanarMap::endpoints(EdgeId e) const {
  if (e >= half_edge_count() || is_leg(e) || partner(e) < e)
    throw std::invalid_argument("endpoints: not an edge id");
  return {vertex_of_[e], vertex_of_[partner(e)]};
}

std::vector<HalfEdge> PlanarMap::legs() const {
  std::vector<HalfEdge> out;
  out.reserve(leg_count_);
  for (HalfEdge h = 0; h < half_edge_count(); ++h)
    if (is_leg(h)) out.push_back(h);
  return out;
}

MapStats stats(const PlanarMap& m) {
  MapStats s;
  s.vertex_count = m.vertex_count();
  s.edge_count = m.edge_count();
  s.face_count = m.face_count();
  s.leg_count = m.leg_count();
  s.degrees.reserve(s.vertex_count);
  for (VertexId v = 0; v < s.vertex_count; ++v) s.degrees.push_back(m.degree(v));
  std::sort(s.degrees.begin(), s.degrees.end());

  if (m.closed()) {
    const std::uint32_t k = m.degree(m.root_vertex());
    bool near_cubic = true;
    for (VertexId v = 0; v < s.vertex_count && near_cubic; ++v)
      if (v != m.root_vertex() && m.degree(v) != 3) near_cubic = false;
    if (near_cubic) {
      // solve E = 3n + 2k - 3 and cross-check V = 2n + k - 1
      const std::int64_t three_n = static_cast<std::int64_t>(s.edge_count) - 2 * k + 3;
      if (three_n >= 0 && three_n % 3 == 0) {
        const std::int64_t n = three_n / 3;
        if (static_cast<std::int64_t>(s.vertex_count) == 2 * n + k - 1)
          s.near_cubic_size = {static_cast<std::uint32_t>(n), k};
      }
    }
  }
  return s;
}

std::vector<HalfEdge> head_face_legs(const PlanarMap& m) {
  if (!m.head()) throw std::invalid_argument("head_face_legs: map has no head");
  std::vector<HalfEdge> out;
  const HalfEdge start = *m.head();
  for (HalfEdge k = m.face_next(start); k != start; k = m.face_next(k))
    if (m.is_leg(k)) out.push_back(k);
  return out;
}

bool is_bridge(const PlanarMap& m, EdgeId e) {
  const auto [u, w] = m.endpoints(e);  // also validates e
  if (u == w) return false;
  std::vector<std::vector<VertexId>> adj(m.vertex_count());
  for (EdgeId g : m.edges()) {
    if (g == e) continue;
    const auto [x, y] = m.endpoints(g);
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<char> visited(m.vertex_count(), 0);
  std::vector<VertexId> queue{u};
  visited[u] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (VertexId next : adj[queue[q]])
      if (!visited[next]) {
        visited[next] = 1;
        queue.push_back(next);
      }
  return !visited[w];
}

std::vector<EdgeId> bridges(const PlanarMap& m) {
  std::vector<EdgeId> out;
  for (EdgeId e : m.edges())
    if (is_bridge(m, e)) out.push_back(e);
  return out;
}

namespace {

// iterative articulation-point detection on the underlying multigraph
bool has_cut_vertex(const PlanarMap& m) {
  const std::uint32_t V = m.vertex_count();
  if (V <= 1) return false;

  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(V);
  for (EdgeId e : m.edges()) {
    const auto [u, w] = m.endpoints(e);
    if (u == w) continue;
    adj[u].push_back({w, e});
    adj[w].push_back({u, e});
  }

  std::vector<std::uint32_t> tin(V, 0), low(V, 0);
  std::vector<char> visited(V, 0);
  std::uint32_t timer = 1;

  struct Frame {
    VertexId v;
    std::int64_t parent_edge;
    std::size_t next;
    std::uint32_t root_children = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({0, -1, 0, 0});
  visited[0] = 1;
  tin[0] = low[0] = timer++;

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < adj[f.v].size()) {
      const auto [to, via] = adj[f.v][f.next++];
      if (static_cast<std::int64_t>(via) == f.parent_edge) continue;
      if (visited[to]) {
        low[f.v] = std::min(low[f.v], tin[to]);
      } else {
        visited[to] = 1;
        tin[to] = low[to] = timer++;
        if (stack.size() == 1) ++f.root_children;
        stack.push_back({to, static_cast<std::int64_t>(via), 0, 0});
      }
    } else {
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& up = stack.back();
        low[up.v] = std::min(low[up.v], low[done.v]);
        const bool up_is_root = stack.size() == 1;
        if (!up_is_root && low[done.v] >= tin[up.v]) return true;
        if (up_is_root && up.root_children > 1) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool is_non_separable(const PlanarMap& m) {
  if (m.edge_count() <= 1) return true;
  for (EdgeId e : m.edges()) {
    const auto [u, w] = m.endpoints(e);
    if (u == w) return false;  // a loop plus anything else separates at its vertex
  }
  return !has_cut_vertex(m);
}

}  // namespace kreweras
