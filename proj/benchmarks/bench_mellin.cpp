#include <benchmark/benchmark.h>

#include "genfrac/mellin/mellin.hpp"

using namespace genfrac::mellin;
using genfrac::operators::Order;
using genfrac::operators::Side;
using genfrac::operators::TestFunction;

static void BM_MellinNumeric(benchmark::State& state) {
  const auto f = TestFunction::exp_power(1.0, 2.0);
  const auto sp = StripPoint::for_function(f, Complex(1.5, 2.0));
  for (auto _ : state) benchmark::DoNotOptimize(mellin_numeric(f, sp));
}
BENCHMARK(BM_MellinNumeric);

static void BM_IntegralIdentity(benchmark::State& state) {
  const auto f = TestFunction::exp_power(1.0, 1.0);
  const auto sp = StripPoint::for_function(f, 0.25);
  const genfrac::numerics::QuadratureConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_integral_identity(f, Order(0.5, 1.0), sp, Side::left, cfg));
  }
}
BENCHMARK(BM_IntegralIdentity)->Unit(benchmark::kMillisecond);
