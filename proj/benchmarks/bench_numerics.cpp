#include <benchmark/benchmark.h>

#include "genfrac/numerics/gamma.hpp"
#include "genfrac/numerics/quadrature.hpp"

namespace gn = genfrac::numerics;

static void BM_GammaReal(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gn::gamma(x));
    x = x < 30.0 ? x + 0.731 : 0.37;
  }
}
BENCHMARK(BM_GammaReal);

static void BM_GammaComplex(benchmark::State& state) {
  const gn::Complex z(0.8, 3.5);
  for (auto _ : state) benchmark::DoNotOptimize(gn::gamma(z));
}
BENCHMARK(BM_GammaComplex);

// Fresh exponents every iteration bypass the rule cache.
static void BM_JacobiRuleBuild(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  double alpha = -0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gn::gauss_jacobi_rule(order, alpha, 0.0));
    alpha = alpha < 0.9 ? alpha + 1e-7 : -0.5;
  }
}
BENCHMARK(BM_JacobiRuleBuild)->RangeMultiplier(4)->Range(16, 512);

static void BM_TanhSinh(benchmark::State& state) {
  const gn::QuadratureConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gn::tanh_sinh<double>([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 4.0, cfg));
  }
}
BENCHMARK(BM_TanhSinh);
