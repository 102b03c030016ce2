#include "kreweras/bijection.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kreweras/map_ops.hpp"

namespace kreweras {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::pair<std::vector<HalfEdge>, std::vector<std::int32_t>> copy_arrays(const PlanarMap& m) {
  const std::uint32_t h_count = m.half_edge_count();
  std::vector<HalfEdge> sigma(h_count);
  std::vector<std::int32_t> alpha(h_count);
  for (HalfEdge h = 0; h < h_count; ++h) {
    sigma[h] = m.sigma(h);
    alpha[h] = m.alpha(h);
  }
  return {std::move(sigma), std::move(alpha)};
}

/// Mutable rotation-system buffers for the linear-time forward pass. The legs
/// ring mirrors the head-face tour order with the head left out, so the two
/// outer legs are its front and back. Each entry carries the depth of its
/// vertex, because that is the only per-vertex fact the pass ever reads.
///
/// Pairings are not written into an involution table as they happen: each
/// sprout pairs the old head with the first fresh half-edge, which the tree
/// record already determines, and each 'c' pairing lands in a flat list. The
/// involution is assembled once at the end, keeping the per-letter loop free
/// of scattered writes.
///
/// A state can be reset and reused; reuse keeps the capacity of every buffer
/// that is not moved into the finished map, so repeated passes on one thread
/// stop allocating after the largest one.
struct GrowingState {
  struct OuterLeg {
    HalfEdge leg = 0;
    std::uint32_t depth = 0;
  };

  std::vector<HalfEdge> sigma;
  std::vector<VertexId> vertex_of;
  std::vector<std::uint32_t> degree;
  std::vector<OuterLeg> ring;  // circular buffer of outer legs
  std::size_t ring_begin = 0;
  std::size_t ring_count = 0;
  HalfEdge head = 0;
  std::uint32_t head_depth = 0;
  std::uint32_t seed_halves = 0;
  std::vector<EdgeId> tree;
  std::vector<std::pair<HalfEdge, HalfEdge>> pairs;

  // sprout_capacity and pair_capacity size the buffers for that many 'a'/'b'
  // and 'c' steps, so a full forward pass never reallocates.
  void reset(std::uint32_t target, std::size_t sprout_capacity,
             std::size_t pair_capacity) {
    const std::uint32_t h_count = target + 2;
    const std::size_t h_final = h_count + 3 * sprout_capacity;
    sigma.clear();
    sigma.reserve(h_final);
    vertex_of.clear();
    vertex_of.reserve(h_final);
    degree.clear();
    degree.reserve(1 + sprout_capacity);
    tree.clear();
    tree.reserve(sprout_capacity);
    pairs.clear();
    pairs.reserve(pair_capacity + 1);  // +1 for the closing pair
    // Every sprout pushes one leg, so the ring never outgrows this bound.
    ring.resize(h_count + sprout_capacity);
    ring_begin = 0;
    ring_count = 0;
    sigma.resize(h_count);
    for (std::uint32_t h = 0; h < h_count; ++h) sigma[h] = (h + 1) % h_count;
    vertex_of.assign(h_count, 0);  // the seed halves form vertex 0
    degree.push_back(h_count);
    seed_halves = h_count;
    for (std::uint32_t h = 2; h < h_count; ++h) push_back_leg({h, 0});
    push_back_leg({0, 0});
    head = 1;
    head_depth = 0;
  }

  static GrowingState seed(std::uint32_t target,
                           std::size_t sprout_capacity = 0,
                           std::size_t pair_capacity = 0) {
    GrowingState s;
    s.reset(target, sprout_capacity, pair_capacity);
    return s;
  }

  void push_front_leg(OuterLeg x) {
    if (ring_count == ring.size()) throw std::logic_error("outer-leg ring overflow");
    ring_begin = (ring_begin == 0 ? ring.size() : ring_begin) - 1;
    ring[ring_begin] = x;
    ++ring_count;
  }
  void push_back_leg(OuterLeg x) {
    if (ring_count == ring.size()) throw std::logic_error("outer-leg ring overflow");
    std::size_t at = ring_begin + ring_count;
    if (at >= ring.size()) at -= ring.size();
    ring[at] = x;
    ++ring_count;
  }
  OuterLeg pop_front_leg() {
    const OuterLeg x = ring[ring_begin];
    ++ring_begin;
    if (ring_begin == ring.size()) ring_begin = 0;
    --ring_count;
    return x;
  }
  OuterLeg pop_back_leg() {
    std::size_t at = ring_begin + ring_count - 1;
    if (at >= ring.size()) at -= ring.size();
    --ring_count;
    return ring[at];
  }

  // Letters 'a' and 'b': hang a fresh vertex off the head. Its rotation holds
  // the half paired with the old head, the new head, and a fresh outer leg;
  // for 'a' the leg lands first on the head-face tour, for 'b' last.
  void sprout(bool leg_first) {
    const HalfEdge edge_half = static_cast<HalfEdge>(sigma.size());
    const HalfEdge new_head = edge_half + 1;
    const HalfEdge outer_leg = edge_half + 2;
    if (leg_first) {
      sigma.push_back(new_head);   // sigma[edge_half]
      sigma.push_back(outer_leg);  // sigma[new_head]
      sigma.push_back(edge_half);  // sigma[outer_leg]
    } else {
      sigma.push_back(outer_leg);  // sigma[edge_half]
      sigma.push_back(edge_half);  // sigma[new_head]
      sigma.push_back(new_head);   // sigma[outer_leg]
    }
    // The three fresh halves form the next vertex; sigma-cycles get numbered
    // by smallest half-edge, which is exactly creation order here.
    const VertexId fresh = static_cast<VertexId>(degree.size());
    vertex_of.push_back(fresh);
    vertex_of.push_back(fresh);
    vertex_of.push_back(fresh);
    degree.push_back(3);
    // The pairing (old head, edge_half) is implied by the tree record: sprout
    // number k pairs tree[k] with seed_halves + 3k.
    tree.push_back(head);  // fresh ids are larger, so the edge is named by the old head
    ++head_depth;          // the new vertex hangs one level below the old head
    if (leg_first) {
      push_front_leg({outer_leg, head_depth});
    } else {
      push_back_leg({outer_leg, head_depth});
    }
    head = new_head;
  }

  // Letter 'c': pair the head with the outer leg at the shallower endpoint;
  // the outer leg at the deeper endpoint becomes the head.
  void pair_outer() {
    if (ring_count < 2) {
      throw std::logic_error("growing step 'c' reached with fewer than two outer legs");
    }
    const OuterLeg first = pop_front_leg();
    const OuterLeg last = pop_back_leg();
    if (first.depth == last.depth) {
      throw std::logic_error("growing step 'c' reached with outer legs at equal depth");
    }
    const OuterLeg shallow = first.depth < last.depth ? first : last;
    const OuterLeg deep = first.depth < last.depth ? last : first;
    pairs.emplace_back(head, shallow.leg);
    head = deep.leg;
    head_depth = deep.depth;
  }

  EdgeId close() {
    if (ring_count != 1) {
      throw std::logic_error("closing reached with leg count other than one");
    }
    const HalfEdge last = ring[ring_begin].leg;
    pairs.emplace_back(head, last);
    return std::min(head, last);
  }

  std::vector<std::int32_t> assemble_alpha() const {
    std::vector<std::int32_t> alpha(sigma.size(), -1);
    HalfEdge edge_half = seed_halves;
    for (const EdgeId old_head : tree) {
      alpha[old_head] = static_cast<std::int32_t>(edge_half);
      alpha[edge_half] = static_cast<std::int32_t>(old_head);
      edge_half += 3;
    }
    for (const auto& [x, y] : pairs) {
      alpha[x] = static_cast<std::int32_t>(y);
      alpha[y] = static_cast<std::int32_t>(x);
    }
    return alpha;
  }

  /// Assembles the closed map after the final pairing. The construction pins
  /// down everything a rotation system derives — every sprout attaches to an
  /// existing vertex and each step keeps the system planar — so the derived
  /// data is taken from the pass itself instead of re-walking the permutations.
  /// Also extracts the tree-edge ids in ascending order: a half-edge is a tree
  /// edge exactly when its partner is the first fresh half of some sprout.
  PlanarMap finish(std::vector<EdgeId>& tree_sorted) {
    std::vector<std::int32_t> alpha = assemble_alpha();
    const HalfEdge h_count = static_cast<HalfEdge>(sigma.size());
    tree_sorted.clear();
    tree_sorted.reserve(tree.size());
    const std::int32_t first_fresh = static_cast<std::int32_t>(seed_halves);
    for (HalfEdge h = 0; h < h_count; ++h) {
      const std::int32_t p = alpha[h];
      if (p >= first_fresh && (p - first_fresh) % 3 == 0) tree_sorted.push_back(h);
    }
    const std::uint32_t edge_count = h_count / 2;
    const std::uint32_t face_count =
        2 + edge_count - static_cast<std::uint32_t>(degree.size());
    return PlanarMap::make_unchecked(std::move(sigma), std::move(alpha), 0,
                                     std::nullopt, std::move(vertex_of),
                                     std::move(degree), 0, face_count);
  }
};

std::optional<std::pair<char, TreeGrowingMap>> undo_sprout(const TreeGrowingMap& g,
                                                           char letter,
                                                           HalfEdge paired_half) {
  const PlanarMap& m = g.map;
  const HalfEdge head = *m.head();
  const HalfEdge x = m.sigma(head);
  const HalfEdge y = m.sigma(x);
  const EdgeId removed = m.edge_of(paired_half);
  if (!g.tree.contains(removed)) return std::nullopt;
  const HalfEdge new_head_old = m.partner(paired_half);

  const std::uint32_t h_count = m.half_edge_count();
  std::vector<std::uint32_t> new_of(h_count, kUnset);
  std::uint32_t next = 0;
  for (HalfEdge h = 0; h < h_count; ++h) {
    if (h != head && h != x && h != y) new_of[h] = next++;
  }
  std::vector<HalfEdge> sigma(next);
  std::vector<std::int32_t> alpha(next);
  for (HalfEdge h = 0; h < h_count; ++h) {
    if (new_of[h] == kUnset) continue;
    sigma[new_of[h]] = new_of[m.sigma(h)];
    if (m.is_leg(h) || h == new_head_old) {
      alpha[new_of[h]] = -1;
    } else {
      alpha[new_of[h]] = static_cast<std::int32_t>(new_of[m.partner(h)]);
    }
  }
  std::vector<EdgeId> tree_edges;
  tree_edges.reserve(g.tree.size() - 1);
  for (EdgeId e : g.tree.edges()) {
    // Relabeling is monotone, so the smaller half of a pair stays the smaller.
    if (e != removed) tree_edges.push_back(new_of[e]);
  }
  PlanarMap out = PlanarMap::make(std::move(sigma), std::move(alpha), new_of[m.root()],
                                  new_of[new_head_old]);
  return std::make_pair(letter,
                        TreeGrowingMap{std::move(out), SpanningTree(std::move(tree_edges))});
}

std::optional<std::pair<char, TreeGrowingMap>> undo_pair(const TreeGrowingMap& g) {
  const PlanarMap& m = g.map;
  const HalfEdge head = *m.head();
  const VertexId head_vertex = m.vertex_of(head);
  const TreeQueries tq(m, g.tree);
  if (!tq.is_depth_tree()) return std::nullopt;

  // The edge to cut open is the unique external edge on the head-face with one
  // endpoint strictly above the head-vertex and the other weakly below it.
  std::optional<EdgeId> split_edge;
  HalfEdge new_head = 0;
  std::set<EdgeId> visited;
  for (HalfEdge h = m.face_next(head); h != head; h = m.face_next(h)) {
    if (m.is_leg(h)) continue;
    const EdgeId e = m.edge_of(h);
    if (g.tree.contains(e) || !visited.insert(e).second) continue;
    const HalfEdge p = m.partner(h);
    const VertexId u = m.vertex_of(h);
    const VertexId w = m.vertex_of(p);
    const bool u_above = u != head_vertex && tq.is_ancestor(u, head_vertex);
    const bool w_above = w != head_vertex && tq.is_ancestor(w, head_vertex);
    const bool u_below = tq.is_ancestor(head_vertex, u);
    const bool w_below = tq.is_ancestor(head_vertex, w);
    std::optional<HalfEdge> candidate;
    if (u_above && w_below) {
      candidate = p;
    } else if (w_above && u_below) {
      candidate = h;
    }
    if (candidate) {
      if (split_edge) {
        throw std::logic_error("reverse step 'c': the splitting edge is not unique");
      }
      split_edge = e;
      new_head = *candidate;
    }
  }
  if (!split_edge) return std::nullopt;

  auto [sigma, alpha] = copy_arrays(m);
  alpha[*split_edge] = -1;
  alpha[m.partner(*split_edge)] = -1;
  PlanarMap out = PlanarMap::make(std::move(sigma), std::move(alpha), m.root(), new_head);
  return std::make_pair('c', TreeGrowingMap{std::move(out), g.tree});
}

}  // namespace

TreeGrowingMap seed_map(std::uint32_t target) {
  GrowingState s = GrowingState::seed(target);
  std::vector<std::int32_t> alpha = s.assemble_alpha();
  PlanarMap m = PlanarMap::make(std::move(s.sigma), std::move(alpha), 0, s.head);
  return {std::move(m), SpanningTree{}};
}

TreeGrowingMap grow(const TreeGrowingMap& g, char letter) {
  const PlanarMap& m = g.map;
  if (!m.head()) throw std::invalid_argument("grow requires a map with legs");
  const HalfEdge head = *m.head();
  auto [sigma, alpha] = copy_arrays(m);

  if (letter == 'a' || letter == 'b') {
    const bool leg_first = letter == 'a';
    const HalfEdge edge_half = m.half_edge_count();
    const HalfEdge new_head = edge_half + 1;
    const HalfEdge outer_leg = edge_half + 2;
    if (leg_first) {
      sigma.insert(sigma.end(), {new_head, outer_leg, edge_half});
    } else {
      sigma.insert(sigma.end(), {outer_leg, edge_half, new_head});
    }
    alpha[head] = static_cast<std::int32_t>(edge_half);
    alpha.insert(alpha.end(), {static_cast<std::int32_t>(head), -1, -1});
    std::vector<EdgeId> tree_edges = g.tree.edges();
    tree_edges.push_back(head);
    PlanarMap out = PlanarMap::make(std::move(sigma), std::move(alpha), m.root(), new_head);
    return {std::move(out), SpanningTree(std::move(tree_edges))};
  }
  if (letter != 'c') {
    throw std::invalid_argument(std::string("unknown step letter '") + letter + "'");
  }

  std::vector<HalfEdge> outer = head_face_legs(m);
  if (outer.size() < 2) {
    throw std::invalid_argument("step 'c' needs two outer legs besides the head");
  }
  const HalfEdge first = outer.front();
  const HalfEdge last = outer.back();
  const TreeQueries tq(m, g.tree);
  const std::uint32_t first_depth = tq.depth(m.vertex_of(first));
  const std::uint32_t last_depth = tq.depth(m.vertex_of(last));
  if (first_depth == last_depth) {
    throw std::invalid_argument("step 'c' needs the two outer legs at distinct depths");
  }
  const HalfEdge shallow = first_depth < last_depth ? first : last;
  const HalfEdge deep = first_depth < last_depth ? last : first;
  alpha[head] = static_cast<std::int32_t>(shallow);
  alpha[shallow] = static_cast<std::int32_t>(head);
  PlanarMap out = PlanarMap::make(std::move(sigma), std::move(alpha), m.root(), deep);
  return {std::move(out), g.tree};
}

MarkedDepthMap close_map(const TreeGrowingMap& g) {
  const PlanarMap& m = g.map;
  if (!m.head()) throw std::invalid_argument("close requires a map with legs");
  const HalfEdge head = *m.head();
  std::vector<HalfEdge> outer = head_face_legs(m);
  if (outer.size() != 1) {
    throw std::invalid_argument("close requires exactly one leg besides the head");
  }
  if (m.degree(m.root_vertex()) < 2) {
    throw std::logic_error("root-vertex of a growing map lost its seed half-edges");
  }
  auto [sigma, alpha] = copy_arrays(m);
  alpha[head] = static_cast<std::int32_t>(outer.front());
  alpha[outer.front()] = static_cast<std::int32_t>(head);
  PlanarMap out = PlanarMap::make(std::move(sigma), std::move(alpha), m.root());
  const std::uint32_t target = out.degree(out.root_vertex()) - 2;
  return {std::move(out), g.tree, std::min(head, outer.front()), target};
}

TreeGrowingMap open_map(const MarkedDepthMap& m) {
  const PlanarMap& map = m.map;
  if (!map.closed()) throw std::invalid_argument("open requires a closed map");
  if (m.marked >= map.half_edge_count() || map.edge_of(m.marked) != m.marked) {
    throw std::invalid_argument("marked id does not name an edge");
  }
  const HalfEdge h1 = m.marked;
  const HalfEdge h2 = map.partner(h1);
  const VertexId v1 = map.vertex_of(h1);
  const VertexId v2 = map.vertex_of(h2);
  HalfEdge head = 0;
  if (v1 == v2) {
    head = h1 == map.root() ? h2 : h1;
  } else {
    const TreeQueries tq(map, m.tree);
    if (tq.is_ancestor(v1, v2)) {
      head = h2;
    } else if (tq.is_ancestor(v2, v1)) {
      head = h1;
    } else {
      throw std::invalid_argument("marked edge must join comparable vertices");
    }
  }
  auto [sigma, alpha] = copy_arrays(map);
  alpha[h1] = -1;
  alpha[h2] = -1;
  return {PlanarMap::make(std::move(sigma), std::move(alpha), map.root(), head), m.tree};
}

std::optional<std::pair<char, TreeGrowingMap>> read_step(const TreeGrowingMap& g) {
  const PlanarMap& m = g.map;
  if (!m.head()) return std::nullopt;
  const HalfEdge head = *m.head();
  const VertexId head_vertex = m.vertex_of(head);
  if (head_vertex == m.root_vertex()) return std::nullopt;
  if (m.degree(head_vertex) != 3) return std::nullopt;
  const HalfEdge x = m.sigma(head);
  const HalfEdge y = m.sigma(x);
  if (m.is_leg(x) && !m.is_leg(y)) return undo_sprout(g, 'a', y);
  if (!m.is_leg(x) && m.is_leg(y)) return undo_sprout(g, 'b', x);
  if (m.is_leg(x) || m.is_leg(y)) return std::nullopt;
  if (is_bridge(m, m.edge_of(x)) || is_bridge(m, m.edge_of(y))) return std::nullopt;
  return undo_pair(g);
}

MarkedDepthMap walk_to_map(const Walk& w, std::uint32_t target) {
  const WalkClassification cls = classify(w);
  if (target == 0) {
    if (!cls.is_excursion) {
      throw std::invalid_argument("walk is not an excursion");
    }
  } else if (!cls.kreweras_target ||
             *cls.kreweras_target != static_cast<std::int64_t>(target)) {
    throw std::invalid_argument(
        "walk is not a quarter-plane walk ending at (" + std::to_string(target) + ", 0)");
  }
  // Reused per thread: the buffers that stay internal keep their capacity, so
  // repeated conversions allocate only what ends up inside the returned map.
  thread_local GrowingState scratch;
  GrowingState& s = scratch;
  s.reset(target, static_cast<std::size_t>(w.count_a() + w.count_b()),
          static_cast<std::size_t>(w.count_c()));
  const std::string& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    switch (*it) {
      case 'a':
        s.sprout(true);
        break;
      case 'b':
        s.sprout(false);
        break;
      default:
        s.pair_outer();
        break;
    }
  }
  const EdgeId marked = s.close();
  std::vector<EdgeId> tree_sorted;
  PlanarMap out = s.finish(tree_sorted);
  return {std::move(out), SpanningTree(std::move(tree_sorted)), marked, target};
}

Walk map_to_walk(const MarkedDepthMap& m) {
  validate_marked_depth_map(m);
  const std::uint32_t edge_budget = m.map.edge_count();
  TreeGrowingMap g = open_map(m);
  std::string letters;
  while (auto step = read_step(g)) {
    letters.push_back(step->first);
    g = std::move(step->second);
    if (letters.size() > edge_budget) {
      throw std::logic_error("reverse replay exceeded the edge budget");
    }
  }
  const TreeGrowingMap seed = seed_map(m.target);
  const CodeDecorations left{&g.tree, std::nullopt};
  const CodeDecorations right{&seed.tree, std::nullopt};
  if (canonical_code(g.map, left) != canonical_code(seed.map, right)) {
    throw std::invalid_argument("map does not replay back to the seed state");
  }
  return Walk::parse(letters);
}

void validate_marked_depth_map(const MarkedDepthMap& m) {
  const PlanarMap& map = m.map;
  if (!map.closed()) throw std::invalid_argument("depth map must be closed");
  const MapStats st = stats(map);
  if (!st.near_cubic_size || st.near_cubic_size->second != m.target + 2) {
    throw std::invalid_argument("map is not near-cubic with root degree target + 2");
  }
  if (!is_non_separable(map)) throw std::invalid_argument("map must be non-separable");
  if (!bridges(map).empty()) throw std::invalid_argument("map must be bridgeless");
  if (m.marked >= map.half_edge_count() || map.edge_of(m.marked) != m.marked) {
    throw std::invalid_argument("marked id does not name an edge");
  }
  if (m.tree.contains(m.marked)) {
    throw std::invalid_argument("marked edge must be external to the tree");
  }
  const TreeQueries tq(map, m.tree);
  if (!tq.is_depth_tree()) throw std::invalid_argument("tree is not a depth tree");
  const auto [u, v] = map.endpoints(m.marked);
  if (u == v && map.edge_count() > 1) {
    throw std::invalid_argument("marked edge may be a loop only in the one-edge map");
  }
}

}  // namespace kreweras
