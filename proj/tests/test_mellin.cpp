#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "genfrac/error.hpp"
#include "genfrac/mellin/mellin.hpp"
#include "oracles.hpp"

using namespace genfrac;
using namespace genfrac::mellin;
using operators::Order;
using operators::Side;
using operators::TestFunction;

namespace {

double cabs_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_SUITE("transform") {
  TEST_CASE("examples") {
    const auto e = TestFunction::exp_power(0.0, 1.0);
    CHECK(cabs_err(mellin_numeric(e, StripPoint::for_function(e, 2.0)), 1.0) < 1e-12);
    const auto t = TestFunction::truncated_power(0.0, 1.0);
    for (double s : {0.5, 1.0, 3.0}) {
      CHECK(cabs_err(mellin_numeric(t, StripPoint::for_function(t, s)), 1.0 / s) < 1e-12);
    }
    const Complex sc(0.7, 2.0);
    CHECK(cabs_err(mellin_numeric(t, StripPoint::for_function(t, sc)), 1.0 / sc) < 1e-11);
    const auto xe = TestFunction::exp_power(1.0, 1.0);
    CHECK(cabs_err(mellin_numeric(xe, StripPoint::for_function(xe, 1.5)), 1.3293403882) < 1e-10);
  }

  TEST_CASE("complex s against the gamma function") {
    // M[x^mu e^{-x^d}](s) = Gamma((s+mu)/d) / d
    for (auto [mu, d] : {std::pair{0.0, 1.0}, std::pair{1.0, 2.0}, std::pair{0.5, 0.7}}) {
      const auto f = TestFunction::exp_power(mu, d);
      for (const Complex s : {Complex(1.0, 0.5), Complex(2.5, -3.0), Complex(0.2, 1.0), Complex(3.0, 0.0)}) {
        const Complex want = oracle::complex_gamma((s + mu) / d) / d;
        const Complex got = mellin_numeric(f, StripPoint::for_function(f, s));
        CHECK_MESSAGE(cabs_err(got, want) < 1e-10, "mu=" << mu << " d=" << d << " s=" << s);
      }
    }
  }

  TEST_CASE("strip violations are rejected") {
    const auto f = TestFunction::exp_power(1.0, 1.0);
    CHECK_THROWS_AS(mellin_numeric(f, StripPoint::for_function(f, -1.5)), Error);
    const auto p = TestFunction::power(1.0);
    CHECK_THROWS_AS(mellin_numeric(p, StripPoint::for_function(p, 0.5)), Error);
  }

  TEST_CASE("relative residual") {
    CHECK(relative_residual(1.0, 1.0) == 0.0);
    CHECK(relative_residual(1.1, 1.0) == doctest::Approx(0.1));
    CHECK(std::isfinite(relative_residual(1.0, 0.0)));
  }
}

TEST_SUITE("factors") {
  TEST_CASE("rho = 1 reduces to the Riemann-Liouville factors") {
    for (double s : {-1.3, -0.4, 0.2}) {
      for (double a : {0.25, 0.5}) {
        const double want = oracle::gamma(1.0 - s - a) / oracle::gamma(1.0 - s);
        CHECK(std::abs(mt1_factor(s, a, 1.0) - want) <= 1e-12 * std::abs(want));
        const double want_d = oracle::gamma(1.0 - s + a) / oracle::gamma(1.0 - s);
        CHECK(std::abs(mtd1_factor(s, a, 1.0) - want_d) <= 1e-12 * std::abs(want_d));
      }
    }
    // alpha -> 1 in the derivative factor gives 1 - s
    CHECK(std::abs(mtd1_factor(0.3, 1.0, 1.0) - 0.7) < 1e-14);
  }

  TEST_CASE("small-rho limit of the MT1 factor") {
    const double s = -0.5;
    const double alpha = 0.5;
    double prev = 1e300;
    for (double rho : {1e-1, 1e-2, 1e-3}) {
      const double gap = std::abs(mt1_factor(s, alpha, rho).real() * std::pow(-s, alpha) - 1.0);
      CHECK(gap < prev);
      prev = gap;
      CHECK(std::abs(mt1_factor_small_rho(s, alpha, rho) - std::pow(-s, -alpha)) < 0.1 * rho + 1e-12);
    }
    CHECK(prev < 1e-3);
  }
}

TEST_SUITE("identities") {
  const QuadratureConfig cfg;

  TEST_CASE("MT1 example") {
    const auto f = TestFunction::exp_power(1.0, 1.0);
    const auto r = check_integral_identity(f, Order(0.5, 1.0), StripPoint::for_function(f, 0.25), Side::left, cfg);
    CHECK(r.strip_condition_met);
    REQUIRE(r.evaluated());
    CHECK(r.rel_residual < 1e-4);
  }

  TEST_CASE("MT1 strip condition is sharp") {
    const auto f = TestFunction::exp_power(1.0, 1.0);
    // s/rho + alpha = 1 exactly, and just beyond
    for (double s : {0.5, 0.51}) {
      const auto r = check_integral_identity(f, Order(0.5, 1.0), StripPoint::for_function(f, s), Side::left, cfg);
      CHECK_FALSE(r.strip_condition_met);
      CHECK(r.status == IdentityStatus::strip_violation);
    }
    const auto ok = check_integral_identity(f, Order(0.5, 1.0), StripPoint::for_function(f, 0.3), Side::left, cfg);
    CHECK(ok.strip_condition_met);
    CHECK(ok.rel_residual < 1e-4);
  }

  TEST_CASE("MT2 and complex s") {
    const auto f = TestFunction::exp_power(0.5, 1.5);
    const auto r = check_integral_identity(f, Order(0.7, 2.0), StripPoint::for_function(f, Complex(1.2, 0.8)),
                                           Side::right, cfg);
    REQUIRE(r.evaluated());
    CHECK(r.rel_residual < 1e-6);
    const auto bad = check_integral_identity(f, Order(0.7, 2.0), StripPoint::for_function(f, -0.1), Side::right, cfg);
    CHECK_FALSE(bad.strip_condition_met);
  }

  TEST_CASE("MT1 with a > 0 is computed but informational") {
    const auto f = TestFunction::exp_power(1.0, 1.0);
    IntegralIdentityOptions opts;
    opts.lower = 0.5;
    const auto r = check_integral_identity(f, Order(0.5, 1.0), StripPoint::for_function(f, 0.25), Side::left, cfg,
                                           opts);
    CHECK(r.evaluated());
    CHECK_FALSE(r.note.empty());
  }

  TEST_CASE("MTD examples") {
    const auto f = TestFunction::exp_power(2.0, 1.0);
    const auto left = check_derivative_identity(f, Order(0.5, 1.0), StripPoint::for_function(f, 0.5), Side::left, cfg);
    REQUIRE(left.evaluated());
    CHECK(left.rel_residual < 1e-3);
    const auto right = check_derivative_identity(f, Order(0.5, 1.0), StripPoint::for_function(f, 2.5), Side::right, cfg);
    REQUIRE(right.evaluated());
    CHECK(right.rel_residual < 1e-3);
  }

  TEST_CASE("MTD flags non-vanishing boundary terms") {
    // x^{s-rho} I^{1-alpha} e^{-x} ~ x^{s-alpha} at 0, still large at 1e-4 for s = 0.6
    const auto f = TestFunction::exp_power(0.0, 1.0);
    const auto r = check_derivative_identity(f, Order(0.5, 1.0), StripPoint::for_function(f, 0.6), Side::left, cfg);
    CHECK(r.status == IdentityStatus::boundary_nonvanishing);
  }

  TEST_CASE("MTD needs alpha < 1") {
    const auto f = TestFunction::exp_power(2.0, 1.0);
    const auto r = check_derivative_identity(f, Order(1.5, 1.0), StripPoint::for_function(f, 0.5), Side::left, cfg);
    CHECK_FALSE(r.evaluated());
  }
}

TEST_SUITE("properties") {
  const QuadratureConfig cfg;

  TEST_CASE("table properties for e^{-x}") {
    const auto f = TestFunction::exp_power(0.0, 1.0);
    const auto at1 = check_transform_properties(f, StripPoint::for_function(f, 1.0), cfg);
    REQUIRE(at1.size() == 4);
    for (const auto& r : at1) {
      if (r.label == "P2") {
        CHECK(cabs_err(r.lhs, 1.0) < 1e-10);
      }
      if (r.label == "P3") {
        CHECK(cabs_err(r.lhs, std::sqrt(std::numbers::pi) / 2.0) < 1e-10);
      }
      if (r.evaluated()) CHECK_MESSAGE(r.rel_residual < 1e-8, r.label);
    }
    const auto at2 = check_transform_properties(f, StripPoint::for_function(f, 2.0), cfg);
    for (const auto& r : at2) {
      if (r.label == "P5") {
        REQUIRE(r.evaluated());
        CHECK(cabs_err(r.lhs, -2.0) < 1e-8);
      }
      if (r.label == "P6") CHECK_FALSE(r.evaluated());  // needs Re s < 0
    }
    const auto neg = check_transform_properties(f, StripPoint::for_function(f, Complex(-0.5, 0.0)), cfg);
    for (const auto& r : neg) {
      if (r.label == "P6") {
        REQUIRE(r.evaluated());
        CHECK(r.rel_residual < 1e-8);
      }
    }
  }

  TEST_CASE("x f' is inapplicable across a jump") {
    const auto t = TestFunction::truncated_power(1.0, 2.0);
    const auto reports = check_transform_properties(t, StripPoint::for_function(t, 1.0), cfg);
    for (const auto& r : reports) {
      if (r.label == "P5") CHECK(r.status == IdentityStatus::inapplicable);
    }
  }

  TEST_CASE("first-derivative transform") {
    const auto e = TestFunction::exp_power(0.0, 1.0);
    const auto r1 = mth_derivative_transform_check(e, 1, StripPoint::for_function(e, 2.0), cfg);
    REQUIRE(r1.evaluated());
    CHECK(cabs_err(r1.lhs, -1.0) < 1e-8);
    CHECK(cabs_err(r1.rhs, -1.0) < 1e-12);

    const auto xe = TestFunction::exp_power(1.0, 1.0);
    const auto r2 = mth_derivative_transform_check(xe, 1, StripPoint::for_function(xe, 2.5), cfg);
    REQUIRE(r2.evaluated());
    CHECK(cabs_err(r2.rhs, -1.5 * oracle::gamma(2.5)) < 1e-10);
    CHECK(r2.rel_residual < 1e-8);

    const auto g = TestFunction::exp_power(0.0, 2.0);
    const auto r3 = mth_derivative_transform_check(g, 1, StripPoint::for_function(g, 2.0), cfg);
    REQUIRE(r3.evaluated());
    CHECK(r3.rel_residual < 1e-6);

    CHECK_THROWS_AS(mth_derivative_transform_check(e, 2, StripPoint::for_function(e, 2.0), cfg), Error);
  }
}
