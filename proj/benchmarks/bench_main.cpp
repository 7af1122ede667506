#include <benchmark/benchmark.h>

#include <random>

#include "kipas/constructions.hpp"
#include "kipas/patterns.hpp"
#include "kipas/search.hpp"
#include "kipas/structure.hpp"

using namespace kipas;

namespace {

EdgeColoring random_coloring(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeColoring g(n, k);
  std::uniform_int_distribution<int> pick(1, k);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.set(u, v, pick(rng));
  return g;
}

void BM_LongestPath(benchmark::State& state) {
  const auto g = random_coloring(static_cast<int>(state.range(0)), 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(longest_mono_path(g, 1).order);
}
BENCHMARK(BM_LongestPath)->DenseRange(8, 20, 4);

void BM_KipasDetection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = witness_b3_kipas(n);
  for (auto _ : state) benchmark::DoNotOptimize(has_mono_pattern_any(g, PatternSpec::kipas(n)));
}
BENCHMARK(BM_KipasDetection)->DenseRange(5, 11, 2);

void BM_LinearForest(benchmark::State& state) {
  const auto g = random_coloring(static_cast<int>(state.range(0)), 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(max_linear_forest(g, 1, 3).edges);
}
BENCHMARK(BM_LinearForest)->DenseRange(8, 14, 2);

void BM_RainbowP5(benchmark::State& state) {
  const auto g = random_coloring(static_cast<int>(state.range(0)), 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(has_rainbow(g, PatternSpec::path(5)));
}
BENCHMARK(BM_RainbowP5)->Arg(8)->Arg(16);

void BM_RamseyPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ramsey(PatternSpec::path(n), PatternSpec::path(n), 9).value);
}
BENCHMARK(BM_RamseyPaths)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

void BM_BkSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compute_bk(3, PatternSpec::path(6), 10, {static_cast<int>(state.range(0))}).value);
}
BENCHMARK(BM_BkSearch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_UniversalCheck(benchmark::State& state) {
  UniversalQuery q;
  q.n = 7;
  q.forbidden = {{1, PatternSpec::kipas(5)}};
  q.required = {{2, PatternSpec::linear_forest_exact({3, 3})}, {2, PatternSpec::path(5)},
                {2, PatternSpec::linear_forest_exact({4, 2})}};
  for (auto _ : state) benchmark::DoNotOptimize(universal_check(q).holds);
}
BENCHMARK(BM_UniversalCheck)->Unit(benchmark::kMillisecond);

void BM_MultipartiteHam(benchmark::State& state) {
  const std::vector<int> sizes = {3, 5, 7, 9, 6};
  for (auto _ : state) benchmark::DoNotOptimize(multipartite_ham(sizes, HamMode::Cycle));
}
BENCHMARK(BM_MultipartiteHam);

}  // namespace

BENCHMARK_MAIN();
