#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kreweras/bijection.hpp"
#include "kreweras/counting.hpp"
#include "kreweras/map_ops.hpp"
#include "kreweras/oracles.hpp"
#include "kreweras/planar_map.hpp"
#include "kreweras/sampler.hpp"
#include "kreweras/walk.hpp"
#include "test_support.hpp"

using namespace kreweras;

namespace {

// 0.999 quantiles of the chi-squared distribution, pinned so a sampler bias
// fails loudly while a correct sampler fails spuriously once in a thousand runs.
constexpr double kChiSquared999Dof2 = 13.816;
constexpr double kChiSquared999Dof3 = 16.266;

}  // namespace

TEST_CASE("the random source is deterministic and uniform on ranges") {
  Rng a(42);
  Rng b(42);
  for (int k = 0; k < 20; ++k) CHECK(a.next() == b.next());

  Rng r(7);
  for (std::uint64_t n : {1ull, 2ull, 3ull, 10ull, 1000ull, 1ull << 40}) {
    for (int k = 0; k < 50; ++k) CHECK(r.below(n) < n);
  }
  for (int k = 0; k < 10; ++k) CHECK(r.below(1) == 0);
  CHECK_THROWS_AS(r.below(0), std::invalid_argument);

  bool saw_heads = false;
  bool saw_tails = false;
  for (int k = 0; k < 100; ++k) (r.coin() ? saw_heads : saw_tails) = true;
  CHECK(saw_heads);
  CHECK(saw_tails);
}

TEST_CASE("per-item seeds are stable and distinct") {
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t k = 0; k <= 100; ++k) seen.insert(derive_seed(2024, k));
  CHECK(seen.size() == 101);
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("the balancing rotation on explicit arrangements") {
  CHECK(balance_arrangement("caaa").letters() == "caa");
  CHECK(balance_arrangement("acaa").letters() == "caa");
  CHECK(balance_arrangement("aaca").letters() == "caa");
  CHECK(balance_arrangement("aaac").letters() == "caa");
  CHECK(balance_arrangement("a").letters() == "");
  CHECK(balance_arrangement("acaaaca").letters() == "caacaa");

  CHECK_THROWS_AS(balance_arrangement(""), std::invalid_argument);
  CHECK_THROWS_AS(balance_arrangement("cb"), std::invalid_argument);
  CHECK_THROWS_AS(balance_arrangement("ca"), std::invalid_argument);
  CHECK_THROWS_AS(balance_arrangement("aa"), std::invalid_argument);
}

TEST_CASE("every arrangement balances, and the fibers are even") {
  for (int n = 0; n <= 4; ++n) {
    std::string arrangement(static_cast<std::size_t>(3) * n + 1, 'a');
    for (int k = 0; k < n; ++k) arrangement[arrangement.size() - 1 - k] = 'c';
    std::sort(arrangement.begin(), arrangement.end());

    std::map<std::string, std::size_t> hits;
    std::size_t arrangements = 0;
    do {
      ++arrangements;
      const ProjectedWalk w = balance_arrangement(arrangement);
      CHECK(w.size() == n);
      ++hits[w.letters()];
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    CHECK(BigInt(arrangements) == binomial(3 * n + 1, n));
    CHECK(BigInt(hits.size()) == count(CountKind::projected, n));
    for (const auto& [word, times] : hits) {
      CHECK(times == static_cast<std::size_t>(3 * n + 1));
    }
  }
}

TEST_CASE("sampled words are valid and reproducible") {
  for (int n : {0, 1, 2, 5, 40}) {
    Rng rng(derive_seed(9, static_cast<std::uint64_t>(n)));
    const ProjectedWalk p = sample_projected(n, rng);
    CHECK(p.size() == n);

    const Walk w = sample_excursion(n, rng);
    const WalkClassification cls = classify(w);
    CHECK(cls.is_excursion);
    CHECK(cls.size == n);
  }

  Rng r1(5);
  Rng r2(5);
  CHECK(sample_excursion(10, r1) == sample_excursion(10, r2));
  CHECK_THROWS_AS([] {
    Rng r(1);
    sample_projected(-1, r);
  }(), std::invalid_argument);
}

TEST_CASE("projected sampling is uniform at size two") {
  const std::vector<ProjectedWalk> support = enumerate_projected(2);
  REQUIRE(support.size() == 3);
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < support.size(); ++k) index[support[k].letters()] = k;

  constexpr std::size_t kDraws = 30000;
  std::vector<std::size_t> counts(support.size(), 0);
  Rng rng(20240915);
  for (std::size_t k = 0; k < kDraws; ++k) {
    ++counts.at(index.at(sample_projected(2, rng).letters()));
  }
  const double expected = static_cast<double>(kDraws) / support.size();
  CHECK(test_support::chi_square(counts, expected) < kChiSquared999Dof2);
}

TEST_CASE("excursion sampling is uniform at size one") {
  constexpr std::size_t kDraws = 40000;
  std::map<std::string, std::size_t> counts;
  Rng rng(77);
  for (std::size_t k = 0; k < kDraws; ++k) {
    ++counts[sample_excursion(1, rng).letters()];
  }
  REQUIRE(counts.size() == 4);  // caa, cab, cba, cbb
  std::vector<std::size_t> observed;
  for (const auto& [word, times] : counts) observed.push_back(times);
  CHECK(test_support::chi_square(observed, kDraws / 4.0) < kChiSquared999Dof3);
}

TEST_CASE("sampled maps have the advertised shape") {
  SUBCASE("decorated") {
    Rng rng(101);
    const SampledMap s = sample_map(SampleTarget::marked_depth, 4, rng);
    REQUIRE(s.tree.has_value());
    REQUIRE(s.marked.has_value());
    validate_marked_depth_map(MarkedDepthMap{s.map, *s.tree, *s.marked, 0});
  }
  SUBCASE("bare near-cubic") {
    Rng rng(102);
    const SampledMap s = sample_map(SampleTarget::near_cubic, 3, rng);
    CHECK_FALSE(s.tree.has_value());
    CHECK_FALSE(s.marked.has_value());
    const MapStats st = stats(s.map);
    REQUIRE(st.near_cubic_size.has_value());
    CHECK(*st.near_cubic_size == std::pair<std::uint32_t, std::uint32_t>{3, 2});
    CHECK(bridges(s.map).empty());
    CHECK(is_non_separable(s.map));
  }
  SUBCASE("cubic") {
    Rng rng(103);
    const SampledMap s = sample_map(SampleTarget::cubic, 3, rng);
    CHECK(s.map.closed());
    CHECK(s.map.edge_count() == 9);  // 3n
    for (VertexId v = 0; v < s.map.vertex_count(); ++v) CHECK(s.map.degree(v) == 3);
    CHECK(bridges(s.map).empty());
  }
  SUBCASE("triangulation") {
    Rng rng(104);
    const SampledMap s = sample_map(SampleTarget::triangulation, 3, rng);
    for (EdgeId e : s.map.edges()) {
      const auto [u, v] = s.map.endpoints(e);
      CHECK(u != v);  // loopless
    }
    const std::vector<std::uint32_t> degrees = test_support::face_degrees(s.map);
    for (std::uint32_t d : degrees) CHECK(d == 3);
  }
  SUBCASE("size zero still works where defined") {
    Rng rng(105);
    const SampledMap s = sample_map(SampleTarget::near_cubic, 0, rng);
    CHECK(s.map.edge_count() == 1);
  }
  SUBCASE("rejected sizes") {
    Rng rng(106);
    CHECK_THROWS_AS(sample_map(SampleTarget::cubic, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_map(SampleTarget::triangulation, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_map(SampleTarget::marked_depth, -1, rng), std::invalid_argument);
  }
  SUBCASE("equal seeds give equal maps") {
    Rng r1(2025);
    Rng r2(2025);
    const SampledMap a = sample_map(SampleTarget::near_cubic, 6, r1);
    const SampledMap b = sample_map(SampleTarget::near_cubic, 6, r2);
    CHECK(canonical_code(a.map) == canonical_code(b.map));
  }
}
