#include "kreweras/map_io.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace kreweras {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::uint32_t get_u32(const json& j, const char* field, std::uint64_t bound) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw std::invalid_argument(std::string("map JSON: ") + field + " must be an integer");
  }
  const std::int64_t v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= bound) {
    throw std::invalid_argument(std::string("map JSON: ") + field + " out of range");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::string map_to_json(const PlanarMap& m, const SpanningTree* tree,
                        std::optional<EdgeId> marked) {
  ordered_json j;
  j["H"] = m.half_edge_count();
  std::vector<std::uint32_t> sigma(m.half_edge_count());
  std::vector<std::int32_t> alpha(m.half_edge_count());
  for (HalfEdge h = 0; h < m.half_edge_count(); ++h) {
    sigma[h] = m.sigma(h);
    alpha[h] = m.alpha(h);
  }
  j["sigma"] = sigma;
  j["alpha"] = alpha;
  j["root"] = m.root();
  if (m.head()) {
    j["head"] = *m.head();
  } else {
    j["head"] = nullptr;
  }
  if (tree != nullptr) {
    j["tree"] = tree->edges();
  } else {
    j["tree"] = nullptr;
  }
  if (marked) {
    j["marked"] = *marked;
  } else {
    j["marked"] = nullptr;
  }
  return j.dump();
}

ParsedMap map_from_json(std::string_view text) {
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw std::invalid_argument("map JSON: not a JSON object");
  }
  if (!j.contains("H") || !j.contains("sigma") || !j.contains("alpha") || !j.contains("root")) {
    throw std::invalid_argument("map JSON: H, sigma, alpha and root are required");
  }
  const std::uint32_t h_count = get_u32(j.at("H"), "H", std::uint64_t{1} << 31);
  const json& js = j.at("sigma");
  const json& ja = j.at("alpha");
  if (!js.is_array() || js.size() != h_count || !ja.is_array() || ja.size() != h_count) {
    throw std::invalid_argument("map JSON: sigma and alpha must be arrays of length H");
  }
  std::vector<HalfEdge> sigma(h_count);
  std::vector<std::int32_t> alpha(h_count);
  for (std::uint32_t h = 0; h < h_count; ++h) {
    sigma[h] = get_u32(js.at(h), "sigma entry", h_count);
    const json& a = ja.at(h);
    if (!a.is_number_integer() && !a.is_number_unsigned()) {
      throw std::invalid_argument("map JSON: alpha entries must be integers");
    }
    const std::int64_t v = a.get<std::int64_t>();
    if (v < -1 || v >= static_cast<std::int64_t>(h_count)) {
      throw std::invalid_argument("map JSON: alpha entry out of range");
    }
    alpha[h] = static_cast<std::int32_t>(v);
  }
  const HalfEdge root = get_u32(j.at("root"), "root", h_count);
  std::optional<HalfEdge> head;
  if (j.contains("head") && !j.at("head").is_null()) {
    head = get_u32(j.at("head"), "head", h_count);
  }

  ParsedMap out{PlanarMap::make(std::move(sigma), std::move(alpha), root, head), std::nullopt,
                std::nullopt};
  if (j.contains("tree") && !j.at("tree").is_null()) {
    const json& jt = j.at("tree");
    if (!jt.is_array()) throw std::invalid_argument("map JSON: tree must be an array or null");
    std::vector<EdgeId> edges;
    edges.reserve(jt.size());
    for (const json& e : jt) edges.push_back(get_u32(e, "tree entry", h_count));
    out.tree = SpanningTree(std::move(edges));
  }
  if (j.contains("marked") && !j.at("marked").is_null()) {
    out.marked = get_u32(j.at("marked"), "marked", h_count);
  }
  return out;
}

std::string map_to_dot(const PlanarMap& m, const SpanningTree* tree,
                       std::optional<EdgeId> marked) {
  std::ostringstream os;
  os << "graph rooted_map {\n";
  os << "  node [shape=circle];\n";
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    os << "  v" << v;
    if (v == m.root_vertex()) os << " [shape=doublecircle]";
    os << ";\n";
  }
  os << "  root_stub [shape=none, label=\"\"];\n";
  os << "  root_stub -- v" << m.root_vertex() << " [style=dotted, label=\"root\"];\n";
  for (EdgeId e : m.edges()) {
    const auto [u, v] = m.endpoints(e);
    os << "  v" << u << " -- v" << v << " [label=\"" << e << "\"";
    if (tree != nullptr && tree->contains(e)) os << ", penwidth=2.5";
    if (marked && *marked == e) os << ", style=dashed";
    os << "];\n";
  }
  for (HalfEdge h : m.legs()) {
    os << "  leg" << h << " [shape=point, label=\"\"];\n";
    os << "  v" << m.vertex_of(h) << " -- leg" << h << " [style=dotted";
    if (m.head() && *m.head() == h) os << ", label=\"head\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace kreweras
