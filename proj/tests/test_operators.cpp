#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "genfrac/error.hpp"
#include "genfrac/operators/classical.hpp"
#include "genfrac/operators/fractional.hpp"
#include "genfrac/operators/order.hpp"
#include "genfrac/operators/test_function.hpp"
#include "oracles.hpp"

using namespace genfrac;
using namespace genfrac::operators;

namespace {

const double kTwoOverSqrtPi = 2.0 / std::sqrt(std::numbers::pi);

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::domain;
}

}  // namespace

TEST_SUITE("types") {
  TEST_CASE("order derives n") {
    CHECK(Order(0.5, 1.0).n() == 1);
    CHECK(Order(1.0, 1.0).n() == 1);
    CHECK(Order(1.2, 2.0).n() == 2);
    CHECK_THROWS_AS(Order(0.0, 1.0), Error);
    CHECK_THROWS_AS(Order(0.5, 0.0), Error);
    CHECK_THROWS_AS(Order(0.5, -1.0), Error);
  }

  TEST_CASE("interval validation") {
    CHECK_NOTHROW(Interval::left(0.0).validate());
    CHECK_NOTHROW(Interval::right().validate());
    CHECK_THROWS_AS((Interval{-1.0, 2.0, Side::left}).validate(), Error);
    CHECK_THROWS_AS((Interval{2.0, 1.0, Side::right}).validate(), Error);
  }

  TEST_CASE("test functions") {
    const auto f = TestFunction::exp_power(1.0, 1.0);
    CHECK(oracle::rel_err(f(2.0), 2.0 * std::exp(-2.0)) < 1e-15);
    CHECK(f.decays());
    CHECK(f.mellin_strip().lo == -1.0);
    CHECK(f.describe() == "exppower:1,1");
    CHECK(f.support_end().has_value());
    CHECK(f(*f.support_end() * 1.01) == 0.0);

    const auto t = TestFunction::truncated_power(0.0, 1.0);
    CHECK(t(0.5) == 1.0);
    CHECK(t(1.5) == 0.0);
    CHECK(t.has_jump());
    CHECK(TestFunction::power(2.0).mellin_strip().empty());
    CHECK_FALSE(TestFunction::power(2.0).decays());
    CHECK(TestFunction::power(0.5).describe() == "power:0.5");
  }
}

TEST_SUITE("gfi") {
  TEST_CASE("examples") {
    CHECK(oracle::rel_err(gfi_left(TestFunction::power(1.0), Order(1.0, 1.0), Interval::left(), 1.0).value, 0.5) < 1e-12);
    CHECK(oracle::rel_err(gfi_left(TestFunction::power(0.0), Order(0.5, 1.0), Interval::left(), 1.0).value,
                          kTwoOverSqrtPi) < 1e-12);
    CHECK(oracle::rel_err(gfi_right(TestFunction::truncated_power(0.0, 1.0), Order(1.0, 1.0), Interval::right(), 0.0).value,
                          1.0) < 1e-12);
    CHECK(oracle::rel_err(gfi_right(TestFunction::exp_power(1.0, 1.0), Order(0.5, 1.0), Interval::right(), 0.0).value,
                          0.5) < 1e-11);
  }

  TEST_CASE("power law against the Beta-integral oracle at random points") {
    std::mt19937 rng(20240611);
    std::uniform_real_distribution<double> alpha(0.05, 2.5);
    std::uniform_real_distribution<double> rho(0.2, 3.0);
    std::uniform_real_distribution<double> x(0.1, 4.0);
    std::uniform_real_distribution<double> frac(-0.9, 3.0);
    for (int i = 0; i < 40; ++i) {
      const double r = rho(rng);
      const double nu = frac(rng) * r;  // nu / rho > -1
      const double a = alpha(rng);
      const double xv = x(rng);
      INFO("nu=" << nu << " alpha=" << a << " rho=" << r << " x=" << xv);
      const auto res = gfi_left(TestFunction::power(nu), Order(a, r), Interval::left(), xv);
      const double want = oracle::power_integral(nu, a, r, xv);
      CHECK_MESSAGE(oracle::rel_err(res.value, want) < 1e-9,
                    "nu=" << nu << " alpha=" << a << " rho=" << r << " x=" << xv);
      CHECK(res.est_rel_err <= 1e-10);
      CHECK(res.path == Path::quadrature);
    }
  }

  TEST_CASE("finite right endpoint: vanishing range") {
    const auto f = TestFunction::exp_power(1.0, 1.0);
    const Order ord(0.7, 1.3);
    const Interval iv{0.0, 2.0, Side::right};
    const double far = std::abs(gfi_right(f, ord, iv, 1.0).value);
    const double near = std::abs(gfi_right(f, ord, iv, 2.0 - 1e-8).value);
    CHECK(near < 1e-4 * far);
    CHECK_THROWS_AS(gfi_right(f, ord, iv, 2.0), Error);
  }

  TEST_CASE("lower limit a > 0 equals the difference of a = 0 integrals at alpha = 1") {
    const auto f = TestFunction::exp_power(0.5, 2.0);
    const Order ord(1.0, 1.7);
    const double whole = gfi_left(f, ord, Interval::left(0.0), 2.0).value;
    const double head = gfi_left(f, ord, Interval::left(0.0), 0.8).value;
    const double tail = gfi_left(f, ord, Interval::left(0.8), 2.0).value;
    CHECK(oracle::rel_err(tail, whole - head) < 1e-10);
  }

  TEST_CASE("linearity in f") {
    const auto f = TestFunction::exp_power(1.0, 1.0);
    const Order ord(0.4, 0.8);
    for (double x : {0.3, 1.0, 3.0}) {
      const double base = gfi_left(f, ord, Interval::left(), x).value;
      const auto scaled = TestFunction::tabulated([&f](double t) { return -2.5 * f(t); });
      CHECK(oracle::rel_err(gfi_left(scaled, ord, Interval::left(), x).value, -2.5 * base) < 1e-10);
    }
  }

  TEST_CASE("errors") {
    CHECK(kind_of([] { (void)gfi_left(TestFunction::power(-2.0), Order(0.5, 1.0), Interval::left(), 1.0); }) ==
          ErrorKind::divergence);
    CHECK(kind_of([] { (void)gfi_left(TestFunction::power(1.0), Order(0.5, 1.0), Interval::left(1.0), 0.5); }) ==
          ErrorKind::domain);
    CHECK(kind_of([] { (void)gfi_right(TestFunction::power(1.0), Order(0.5, 1.0), Interval::right(), 1.0); }) ==
          ErrorKind::divergence);
  }
}

TEST_SUITE("gfd") {
  TEST_CASE("examples") {
    CHECK(std::abs(gfd_left(TestFunction::power(2.0), Order(1.0, 1.0), Interval::left(), 1.5).value - 3.0) < 1e-6);
    CHECK(oracle::rel_err(gfd_left(TestFunction::power(1.0), Order(0.5, 1.0), Interval::left(), 1.0).value,
                          kTwoOverSqrtPi) < 1e-6);
  }

  TEST_CASE("power law against the closed form") {
    for (double nu : {0.5, 1.0, 2.0, 3.5}) {
      for (double alpha : {0.2, 0.5, 0.8, 1.3, 1.9}) {
        for (double rho : {0.5, 1.0, 2.0}) {
          if (1.0 + nu / rho - alpha <= 0.0) continue;
          const Order ord(alpha, rho);
          const auto cf = power_closed_form(nu, ord);
          for (double x : {0.7, 1.9}) {
            const double want = oracle::power_derivative(nu, alpha, rho, x);
            CHECK(oracle::rel_err(cf.coefficient * std::pow(x, cf.exponent), want) < 1e-12);
            const auto got = gfd_left(TestFunction::power(nu), ord, Interval::left(), x);
            CHECK_MESSAGE(oracle::rel_err(got.value, want) < 1e-6,
                          "nu=" << nu << " alpha=" << alpha << " rho=" << rho << " x=" << x);
          }
        }
      }
    }
  }

  TEST_CASE("right derivative of x e^{-x} against a fine trapezoid") {
    const auto f = TestFunction::exp_power(1.0, 1.0);
    for (double x : {0.25, 1.0, 2.0}) {
      const double got = gfd_right(f, Order(0.5, 1.0), Interval::right(), x).value;
      CHECK_MESSAGE(oracle::rel_err(got, oracle::right_half_derivative_xexp(x)) < 1e-6, "x=" << x);
    }
    // the derivative changes sign at x = 1/2
    CHECK(std::abs(gfd_right(f, Order(0.5, 1.0), Interval::right(), 0.5).value) < 1e-9);
  }

  TEST_CASE("right derivative of order one is minus the derivative") {
    const auto f = TestFunction::exp_power(1.0, 1.0);
    for (double x : {0.5, 1.5}) {
      CHECK(oracle::rel_err(gfd_right(f, Order(1.0, 1.0), Interval::right(), x).value, -f.derivative(x, 1)) < 1e-12);
    }
    // Order one applies -d/dx to f itself, so the cut-off constant gives 0
    // below the cutoff; -d/dx of its order-one integral int_x^1 dt is 1.
    const auto t = TestFunction::truncated_power(0.0, 1.0);
    CHECK(std::abs(gfd_right(t, Order(1.0, 1.0), Interval::right(), 0.5).value) < 1e-12);
    auto inner = [&](double x) { return gfi_right(t, Order(1.0, 1.0), Interval::right(), x).value; };
    const double h = 1e-5;
    CHECK(oracle::rel_err(-(inner(0.5 + h) - inner(0.5 - h)) / (2.0 * h), 1.0) < 1e-6);
  }

  TEST_CASE("inverse pair for order two") {
    const auto f = TestFunction::exp_power(1.0, 1.0);
    const Order ord(1.5, 0.8);
    const auto g = integral_function(f, ord, Interval::left(0.5));
    const auto tab = TestFunction::tabulated(g);
    const double got = gfd_left(tab, ord, Interval::left(0.5), 1.4).value;
    CHECK(oracle::rel_err(got, f(1.4)) < 1e-4);
  }

  TEST_CASE("errors") {
    CHECK(kind_of([] { (void)gfd_left(TestFunction::power(1.0), Order(2.5, 1.0), Interval::left(), 1.0); }) ==
          ErrorKind::domain);
    CHECK(kind_of([] { (void)power_closed_form(1.0, Order(3.0, 1.0)); }) == ErrorKind::pole);
    CHECK(kind_of([] { (void)gfd_right(TestFunction::exp_power(1.0, 1.0), Order(0.5, 1.0), Interval::right(), 0.0); }) ==
          ErrorKind::domain);
  }
}

TEST_SUITE("closed form") {
  TEST_CASE("examples") {
    const auto a = power_closed_form(2.0, Order(1.0, 1.0));
    CHECK(a.coefficient == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(a.exponent == 1.0);
    const auto b = power_closed_form(2.0, Order(0.5, 2.0));
    CHECK(b.exponent == 1.0);
    // rho^alpha Gamma(2) / Gamma(3/2)
    CHECK(oracle::rel_err(b.coefficient, std::sqrt(2.0) / oracle::gamma(1.5)) < 1e-14);
    for (double nu : {0.3, 1.0, 2.5}) {
      const auto c = power_closed_form(nu, Order(0.4, 1.0));
      CHECK(oracle::rel_err(c.coefficient, oracle::gamma(1.0 + nu) / oracle::gamma(1.0 + nu - 0.4)) < 1e-13);
      CHECK(c.exponent == doctest::Approx(nu - 0.4));
    }
  }
}

TEST_SUITE("classical") {
  TEST_CASE("examples") {
    const auto one = TestFunction::power(0.0);
    CHECK(oracle::rel_err(limit_emulation(one, 0.5, Classical::rl_integral, 0.0, 1.0).value, kTwoOverSqrtPi) < 1e-12);
    CHECK(oracle::rel_err(limit_emulation(one, 1.0, Classical::hadamard_integral, 1.0, std::numbers::e).value, 1.0) <
          1e-12);
    CHECK(oracle::rel_err(limit_emulation(TestFunction::power(1.0), 0.5, Classical::rl_derivative, 0.0, 1.0).value,
                          kTwoOverSqrtPi) < 1e-6);
  }

  TEST_CASE("Hadamard integral of a constant") {
    // (1/Gamma(alpha)) int_a^x log(x/t)^{alpha-1} dt/t = log(x/a)^alpha / Gamma(alpha + 1)
    for (double alpha : {0.3, 0.8, 1.6}) {
      const double got = limit_emulation(TestFunction::power(0.0), alpha, Classical::hadamard_integral, 1.0, 3.0).value;
      CHECK(oracle::rel_err(got, std::pow(std::log(3.0), alpha) / oracle::gamma(alpha + 1.0)) < 1e-11);
    }
  }

  TEST_CASE("Hadamard derivative of log powers") {
    // D^alpha log(x/a)^m = Gamma(m+1)/Gamma(m+1-alpha) log(x/a)^{m-alpha}
    const auto f = TestFunction::tabulated([](double t) { return std::pow(std::log(t), 2.0); });
    for (double alpha : {0.4, 1.5}) {
      const double got = limit_emulation(f, alpha, Classical::hadamard_derivative, 1.0, 2.5).value;
      const double want = 2.0 / oracle::gamma(3.0 - alpha) * std::pow(std::log(2.5), 2.0 - alpha);
      CHECK_MESSAGE(oracle::rel_err(got, want) < 1e-6, "alpha=" << alpha);
    }
  }

  TEST_CASE("Hadamard needs a > 0") {
    CHECK(kind_of([] {
            (void)limit_emulation(TestFunction::power(0.0), 0.5, Classical::hadamard_integral, 0.0, 1.0);
          }) == ErrorKind::domain);
  }
}
