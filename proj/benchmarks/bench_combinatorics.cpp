#include <benchmark/benchmark.h>

#include "genfrac/combinatorics/delta.hpp"

using namespace genfrac::combinatorics;

static void BM_ExactRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta_coefficients(2.0, n));
}
BENCHMARK(BM_ExactRow)->Arg(10)->Arg(30)->Arg(50);

static void BM_FloatRow(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delta_coefficients(0.5, 20));
}
BENCHMARK(BM_FloatRow);

static void BM_ApplyExpansion(benchmark::State& state) {
  const auto f = genfrac::operators::TestFunction::exp_power(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(apply_delta_operator(0.5, 3, f, 1.7));
}
BENCHMARK(BM_ApplyExpansion);
