#include <benchmark/benchmark.h>

#include <random>

#include "zinbiel/catalog.hpp"
#include "zinbiel/operator_spaces.hpp"

namespace {

using namespace zinbiel;

AlgebraPresentation dense_algebra(int n) {
  std::mt19937 rng(20240515);
  std::uniform_int_distribution<int> entry(-3, 3);
  AlgebraPresentation a("bench-dense", n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int v = entry(rng);
        while (v == 0) v = entry(rng);
        a.gamma_at(i, j, k) = v;
      }
  return a;
}

void BM_derivations_dense(benchmark::State& state) {
  const AlgebraPresentation a = dense_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_space(a, SpaceKind::kDerivation).dim());
  }
}
BENCHMARK(BM_derivations_dense)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_quasi_centroid_dense(benchmark::State& state) {
  const AlgebraPresentation a = dense_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_space(a, SpaceKind::kQuasiCentroid).dim());
  }
}
BENCHMARK(BM_quasi_centroid_dense)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_qder_pairs_dense(benchmark::State& state) {
  const AlgebraPresentation a = dense_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_quasi_derivations(a).pair_dim());
  }
}
BENCHMARK(BM_qder_pairs_dense)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_catalog_analysis(benchmark::State& state) {
  const AlgebraPresentation a = get_algebra("Z4^1", {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_algebra(a).qcentroid.dim());
  }
}
BENCHMARK(BM_catalog_analysis)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
