#include <benchmark/benchmark.h>

#include "genfrac/operators/fractional.hpp"

using namespace genfrac::operators;

static void BM_GfiLeft(benchmark::State& state) {
  const auto f = TestFunction::exp_power(1.0, 1.0);
  const Order ord(0.5, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(gfi_left(f, ord, Interval::left(), 1.3));
}
BENCHMARK(BM_GfiLeft);

static void BM_GfiRight(benchmark::State& state) {
  const auto f = TestFunction::exp_power(1.0, 1.0);
  const Order ord(0.5, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(gfi_right(f, ord, Interval::right(), 1.3));
}
BENCHMARK(BM_GfiRight);

// n = 1 and n = 2 derivatives
static void BM_GfdLeft(benchmark::State& state) {
  const auto f = TestFunction::power(0.5);
  const Order ord(static_cast<double>(state.range(0)) / 10.0, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(gfd_left(f, ord, Interval::left(), 1.3));
}
BENCHMARK(BM_GfdLeft)->Arg(5)->Arg(14);

static void BM_ClosedForm(benchmark::State& state) {
  const Order ord(0.9, 1.4);
  for (auto _ : state) benchmark::DoNotOptimize(power_closed_form(2.0, ord));
}
BENCHMARK(BM_ClosedForm);
