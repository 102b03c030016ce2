#include "kreweras/map_ops.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kreweras {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

void require_cubic(const PlanarMap& m) {
  if (!m.closed()) throw std::invalid_argument("cubic map must be closed");
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    if (m.degree(v) != 3) throw std::invalid_argument("map is not cubic");
  }
}

void require_two_near_cubic(const PlanarMap& m) {
  if (!m.closed()) throw std::invalid_argument("2-near-cubic map must be closed");
  if (m.degree(m.root_vertex()) != 2) {
    throw std::invalid_argument("root-vertex of a 2-near-cubic map must have degree 2");
  }
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    if (v != m.root_vertex() && m.degree(v) != 3) {
      throw std::invalid_argument("map is not 2-near-cubic");
    }
  }
}

struct Contraction {
  PlanarMap map;
  std::vector<std::uint32_t> new_of;  // old half-edge -> new, kUnset for erased
};

Contraction contract_root_vertex(const PlanarMap& m) {
  require_two_near_cubic(m);
  const HalfEdge r = m.root();
  const HalfEdge d = m.sigma(r);
  if (m.partner(r) == d) {
    throw std::invalid_argument("the loop map has no cubic counterpart");
  }
  const HalfEdge toward_root_side = m.partner(r);
  const HalfEdge toward_tree_side = m.partner(d);

  const std::uint32_t h_count = m.half_edge_count();
  std::vector<std::uint32_t> new_of(h_count, kUnset);
  std::uint32_t next = 0;
  for (HalfEdge h = 0; h < h_count; ++h) {
    if (h != r && h != d) new_of[h] = next++;
  }

  std::vector<HalfEdge> sigma(next);
  std::vector<std::int32_t> alpha(next);
  for (HalfEdge h = 0; h < h_count; ++h) {
    if (new_of[h] == kUnset) continue;
    sigma[new_of[h]] = new_of[m.sigma(h)];
    alpha[new_of[h]] = static_cast<std::int32_t>(new_of[m.partner(h)]);
  }
  alpha[new_of[toward_root_side]] = static_cast<std::int32_t>(new_of[toward_tree_side]);
  alpha[new_of[toward_tree_side]] = static_cast<std::int32_t>(new_of[toward_root_side]);

  PlanarMap out =
      PlanarMap::make(std::move(sigma), std::move(alpha), new_of[toward_tree_side]);
  return {std::move(out), std::move(new_of)};
}

void append_csv(std::ostringstream& os, const std::vector<std::uint32_t>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) os << ',';
    os << xs[i];
  }
}

std::vector<std::string> split_fields(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::uint32_t parse_u32(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("malformed map code: expected a number, got '" + s + "'");
  }
  unsigned long v = std::stoul(s);
  if (v > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("malformed map code: number out of range");
  }
  return static_cast<std::uint32_t>(v);
}

std::vector<std::string> split_csv(const std::string& s) {
  if (s.empty()) return {};
  return split_fields(s, ',');
}

}  // namespace

PlanarMap dual(const PlanarMap& m) {
  if (!m.closed()) throw std::invalid_argument("dual requires a closed map");
  const std::uint32_t h_count = m.half_edge_count();
  std::vector<HalfEdge> sigma_star(h_count);
  std::vector<std::int32_t> alpha(h_count);
  for (HalfEdge h = 0; h < h_count; ++h) {
    sigma_star[h] = m.face_next(h);
    alpha[h] = m.alpha(h);
  }
  return PlanarMap::make(std::move(sigma_star), std::move(alpha), m.root());
}

PlanarMap cubic_to_near_cubic(const PlanarMap& m) {
  require_cubic(m);
  const HalfEdge rho = m.root();
  const HalfEdge rho_partner = m.partner(rho);
  const std::uint32_t h_count = m.half_edge_count();
  const HalfEdge root_half = h_count;      // new root, repaired with rho's partner
  const HalfEdge tree_half = h_count + 1;  // other half at the new vertex, paired with rho

  std::vector<HalfEdge> sigma(h_count + 2);
  std::vector<std::int32_t> alpha(h_count + 2);
  for (HalfEdge h = 0; h < h_count; ++h) {
    sigma[h] = m.sigma(h);
    alpha[h] = m.alpha(h);
  }
  sigma[root_half] = tree_half;
  sigma[tree_half] = root_half;
  alpha[root_half] = static_cast<std::int32_t>(rho_partner);
  alpha[rho_partner] = static_cast<std::int32_t>(root_half);
  alpha[tree_half] = static_cast<std::int32_t>(rho);
  alpha[rho] = static_cast<std::int32_t>(tree_half);
  return PlanarMap::make(std::move(sigma), std::move(alpha), root_half);
}

PlanarMap near_cubic_to_cubic(const PlanarMap& m) { return contract_root_vertex(m).map; }

std::pair<PlanarMap, SpanningTree> cubic_to_near_cubic(const PlanarMap& m,
                                                       const SpanningTree& t) {
  TreeQueries check(m, t);  // validates that t spans m
  const EdgeId root_edge = m.edge_of(m.root());
  if (t.contains(root_edge)) {
    throw std::invalid_argument("tree must leave the root-edge external");
  }
  PlanarMap out = cubic_to_near_cubic(m);
  // Old half-edge ids persist unchanged; the subdivided halves took fresh top
  // ids, so every old edge keeps its id and the new internal edge is named by
  // the old root half.
  std::vector<EdgeId> edges = t.edges();
  edges.push_back(m.root());
  return {std::move(out), SpanningTree(std::move(edges))};
}

std::pair<PlanarMap, SpanningTree> near_cubic_to_cubic(const PlanarMap& m,
                                                       const SpanningTree& t) {
  TreeQueries check(m, t);  // validates that t spans m
  const HalfEdge r = m.root();
  const HalfEdge d = m.sigma(r);
  if (m.partner(r) == d) {
    throw std::invalid_argument("the loop map has no cubic counterpart");
  }
  const EdgeId root_edge = m.edge_of(r);
  const EdgeId branch_edge = m.edge_of(d);
  if (t.contains(root_edge) || !t.contains(branch_edge)) {
    throw std::invalid_argument(
        "tree must contain the non-root edge at the root-vertex and leave the root-edge "
        "external");
  }
  Contraction c = contract_root_vertex(m);
  std::vector<EdgeId> edges;
  edges.reserve(t.size() - 1);
  for (EdgeId e : t.edges()) {
    if (e == branch_edge) continue;
    // Relabeling is monotone away from the two erased halves, so the smaller
    // half of each surviving pair stays the smaller half.
    edges.push_back(c.new_of[e]);
  }
  return {std::move(c.map), SpanningTree(std::move(edges))};
}

std::string canonical_code(const PlanarMap& m, const CodeDecorations& deco) {
  const std::uint32_t h_count = m.half_edge_count();
  std::vector<std::uint32_t> new_of(h_count, kUnset);
  std::vector<HalfEdge> old_of;
  old_of.reserve(h_count);
  auto assign = [&](HalfEdge h) {
    if (new_of[h] == kUnset) {
      new_of[h] = static_cast<std::uint32_t>(old_of.size());
      old_of.push_back(h);
    }
  };
  assign(m.root());
  for (std::size_t q = 0; q < old_of.size(); ++q) {
    const HalfEdge h = old_of[q];
    assign(m.sigma(h));
    if (!m.is_leg(h)) assign(m.partner(h));
  }
  if (old_of.size() != h_count) {
    throw std::logic_error("canonical_code: map traversal did not reach every half-edge");
  }

  std::ostringstream os;
  os << "v1;" << h_count << ';';
  for (HalfEdge n = 0; n < h_count; ++n) {
    if (n > 0) os << ',';
    os << new_of[m.sigma(old_of[n])];
  }
  os << ';';
  for (HalfEdge n = 0; n < h_count; ++n) {
    if (n > 0) os << ',';
    if (m.is_leg(old_of[n])) {
      os << '.';
    } else {
      os << new_of[m.partner(old_of[n])];
    }
  }
  os << ';';
  if (m.head()) {
    os << new_of[*m.head()];
  } else {
    os << '-';
  }
  os << ';';
  if (deco.tree != nullptr) {
    std::vector<std::uint32_t> ids;
    ids.reserve(deco.tree->size());
    for (EdgeId e : deco.tree->edges()) {
      ids.push_back(std::min(new_of[e], new_of[m.partner(e)]));
    }
    std::sort(ids.begin(), ids.end());
    append_csv(os, ids);
  } else {
    os << '-';
  }
  os << ';';
  if (deco.marked) {
    os << std::min(new_of[*deco.marked], new_of[m.partner(*deco.marked)]);
  } else {
    os << '-';
  }
  return os.str();
}

DecodedMap decode_canonical(const std::string& code) {
  std::vector<std::string> fields = split_fields(code, ';');
  if (fields.size() != 7 || fields[0] != "v1") {
    throw std::invalid_argument("malformed map code: bad layout");
  }
  const std::uint32_t h_count = parse_u32(fields[1]);
  std::vector<std::string> sigma_tokens = split_csv(fields[2]);
  std::vector<std::string> alpha_tokens = split_csv(fields[3]);
  if (sigma_tokens.size() != h_count || alpha_tokens.size() != h_count) {
    throw std::invalid_argument("malformed map code: permutation length mismatch");
  }
  std::vector<HalfEdge> sigma(h_count);
  std::vector<std::int32_t> alpha(h_count);
  for (std::uint32_t h = 0; h < h_count; ++h) {
    sigma[h] = parse_u32(sigma_tokens[h]);
    if (sigma[h] >= h_count) throw std::invalid_argument("malformed map code: bad rotation");
    if (alpha_tokens[h] == ".") {
      alpha[h] = -1;
    } else {
      const std::uint32_t a = parse_u32(alpha_tokens[h]);
      if (a >= h_count) throw std::invalid_argument("malformed map code: bad pairing");
      alpha[h] = static_cast<std::int32_t>(a);
    }
  }
  std::optional<HalfEdge> head;
  if (fields[4] != "-") head = parse_u32(fields[4]);

  DecodedMap out{PlanarMap::make(std::move(sigma), std::move(alpha), 0, head), std::nullopt,
                 std::nullopt};
  if (fields[5] != "-") {
    std::vector<EdgeId> edges;
    for (const std::string& tok : split_csv(fields[5])) edges.push_back(parse_u32(tok));
    out.tree = SpanningTree(std::move(edges));
  }
  if (fields[6] != "-") out.marked = parse_u32(fields[6]);
  return out;
}

}  // namespace kreweras
