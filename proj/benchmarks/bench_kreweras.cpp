#include <benchmark/benchmark.h>

#include <cstdint>

#include "kreweras/bijection.hpp"
#include "kreweras/counting.hpp"
#include "kreweras/map_ops.hpp"
#include "kreweras/sampler.hpp"

namespace {

using namespace kreweras;

void BM_SampleExcursion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t item = 0;
  for (auto _ : state) {
    Rng rng(derive_seed(2024, item++));
    Walk w = sample_excursion(n, rng);
    benchmark::DoNotOptimize(w);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SampleExcursion)->Arg(1000)->Arg(10000)->Arg(100000)->Complexity(benchmark::oN);

void BM_SampleNearCubic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t item = 0;
  for (auto _ : state) {
    Rng rng(derive_seed(2024, item++));
    SampledMap s = sample_map(SampleTarget::near_cubic, n, rng);
    benchmark::DoNotOptimize(s);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SampleNearCubic)->Arg(1000)->Arg(10000)->Arg(100000)->Complexity(benchmark::oN);

void BM_SampleTriangulation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t item = 0;
  for (auto _ : state) {
    Rng rng(derive_seed(2024, item++));
    SampledMap s = sample_map(SampleTarget::triangulation, n, rng);
    benchmark::DoNotOptimize(s);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SampleTriangulation)->Arg(1000)->Arg(10000)->Arg(100000)->Complexity(benchmark::oN);

void BM_CanonicalCode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(derive_seed(7, 0));
  const SampledMap s = sample_map(SampleTarget::near_cubic, n, rng);
  for (auto _ : state) {
    std::string code = canonical_code(s.map);
    benchmark::DoNotOptimize(code);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CanonicalCode)->Arg(1000)->Arg(10000)->Arg(100000)->Complexity(benchmark::oN);

void BM_Count(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    BigInt value = count(CountKind::kreweras_origin, n);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_Count)->Arg(100)->Arg(1000)->Arg(5000);

void BM_MapToWalk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(derive_seed(11, 0));
  const Walk w = sample_excursion(n, rng);
  const MarkedDepthMap image = walk_to_map(w, 0);
  for (auto _ : state) {
    Walk back = map_to_walk(image);
    benchmark::DoNotOptimize(back);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MapToWalk)->Arg(100)->Arg(300)->Arg(1000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
