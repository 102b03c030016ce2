#include "kreweras/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kreweras/bijection.hpp"
#include "kreweras/enumerate.hpp"
#include "kreweras/map_ops.hpp"

namespace kreweras {

namespace {

// Disjoint-set forest over vertex ids.
struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::uint32_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

void list_projected(std::string& word, std::int64_t sum, int ups_left, std::size_t length,
                    std::vector<ProjectedWalk>& out) {
  if (word.size() == length) {
    out.emplace_back(word);
    return;
  }
  if (sum >= 1) {
    word.push_back('a');
    list_projected(word, sum - 1, ups_left, length, out);
    word.pop_back();
  }
  if (ups_left > 0) {
    word.push_back('c');
    list_projected(word, sum + 2, ups_left - 1, length, out);
    word.pop_back();
  }
}

}  // namespace

std::vector<SpanningTree> all_spanning_trees(const MultiGraph& g) {
  const std::vector<EdgeId>& ids = g.edge_ids();
  if (ids.size() > 16) {
    throw std::invalid_argument("spanning tree listing is exhaustive; at most 16 edges");
  }
  const std::uint32_t v_count = g.vertex_count();
  if (v_count == 0) return {};
  const std::uint32_t want = v_count - 1;
  std::vector<SpanningTree> out;
  for (std::uint32_t mask = 0; mask < (1u << ids.size()); ++mask) {
    if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != want) continue;
    UnionFind uf(v_count);
    bool acyclic = true;
    std::vector<EdgeId> chosen;
    chosen.reserve(want);
    for (std::size_t k = 0; k < ids.size() && acyclic; ++k) {
      if (!(mask & (1u << k))) continue;
      const auto [u, v] = g.endpoints(ids[k]);
      if (u == v || !uf.unite(u, v)) {
        acyclic = false;
      } else {
        chosen.push_back(ids[k]);
      }
    }
    // V-1 acyclic edges on V vertices always span.
    if (acyclic) out.emplace_back(std::move(chosen));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpanningTree> all_spanning_trees(const PlanarMap& m) {
  return all_spanning_trees(MultiGraph::from_map(m));
}

std::vector<ProjectedWalk> enumerate_projected(int n) {
  if (n < 0 || n > 7) {
    throw std::invalid_argument("projected walk listing is exhaustive; size must be 0..7");
  }
  std::vector<ProjectedWalk> out;
  std::string word;
  list_projected(word, 0, n, static_cast<std::size_t>(3) * n, out);
  return out;
}

FiberReport fiber_report(int n) {
  if (n < 0 || n > 4) {
    throw std::invalid_argument("fiber census is exhaustive; size must be 0..4");
  }
  FiberReport rep;
  rep.n = n;
  const std::vector<Walk> excursions = enumerate_walks(WalkFamily::excursion, n);
  rep.excursion_count = excursions.size();

  std::set<std::string> marked_codes;
  std::map<std::string, std::size_t> depth_map_fibers;
  std::map<std::string, std::size_t> map_fibers;
  for (const Walk& w : excursions) {
    const MarkedDepthMap image = walk_to_map(w, 0);
    marked_codes.insert(canonical_code(image.map, {&image.tree, image.marked}));
    ++depth_map_fibers[canonical_code(image.map, {&image.tree, std::nullopt})];
    ++map_fibers[canonical_code(image.map, {})];
  }

  rep.marked_object_count = marked_codes.size();
  if (rep.marked_object_count != rep.excursion_count) {
    throw std::logic_error("fiber census: two excursions produced the same marked map");
  }
  rep.depth_map_class_count = depth_map_fibers.size();
  rep.map_class_count = map_fibers.size();

  const std::size_t per_depth_map = static_cast<std::size_t>(n) + 1;
  const std::size_t per_map = (std::size_t{1} << n) * per_depth_map;
  for (const auto& [code, size] : depth_map_fibers) {
    if (size != per_depth_map) {
      throw std::logic_error("fiber census: a tree-decorated map has an unexpected fiber size");
    }
    rep.depth_map_fiber_sizes.push_back(size);
  }
  for (const auto& [code, size] : map_fibers) {
    if (size != per_map) {
      throw std::logic_error("fiber census: a map has an unexpected fiber size");
    }
    rep.map_fiber_sizes.push_back(size);
  }
  std::sort(rep.depth_map_fiber_sizes.begin(), rep.depth_map_fiber_sizes.end());
  std::sort(rep.map_fiber_sizes.begin(), rep.map_fiber_sizes.end());
  return rep;
}

std::string to_json(const FiberReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["excursion_count"] = report.excursion_count;
  j["marked_object_count"] = report.marked_object_count;
  j["depth_map_class_count"] = report.depth_map_class_count;
  j["map_class_count"] = report.map_class_count;
  j["depth_map_fiber_sizes"] = report.depth_map_fiber_sizes;
  j["map_fiber_sizes"] = report.map_fiber_sizes;
  return j.dump();
}

}  // namespace kreweras
