#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kreweras/depth_search.hpp"
#include "kreweras/planar_map.hpp"
#include "kreweras/spanning_tree.hpp"
#include "kreweras/walk.hpp"

namespace kreweras {

/// Brute-force cross-checks for the fast algorithms, exhaustive by design and
/// guarded against large inputs.

/// Every spanning tree, found by testing all edge subsets of size V-1 for
/// acyclicity. Requires at most 16 edges.
std::vector<SpanningTree> all_spanning_trees(const MultiGraph& g);
std::vector<SpanningTree> all_spanning_trees(const PlanarMap& m);

/// All nonnegative +2/-1 words from 0 back to 0 with n up-steps, in
/// lexicographic order. Requires n <= 7.
std::vector<ProjectedWalk> enumerate_projected(int n);

/// Census of the correspondence on all excursions of one size: images are
/// counted as canonical codes, then grouped with the mark dropped and with
/// both decorations dropped. Construction verifies that images are pairwise
/// distinct and that every group has the predicted size (n+1 walks per
/// tree-decorated map, 2^n * (n+1) per bare map).
struct FiberReport {
  int n = 0;
  std::size_t excursion_count = 0;
  std::size_t marked_object_count = 0;
  std::size_t depth_map_class_count = 0;
  std::size_t map_class_count = 0;
  std::vector<std::size_t> depth_map_fiber_sizes;  // ascending
  std::vector<std::size_t> map_fiber_sizes;        // ascending
};

/// Requires 0 <= n <= 4 (the census walks every excursion of that size).
FiberReport fiber_report(int n);

std::string to_json(const FiberReport& report);

}  // namespace kreweras
