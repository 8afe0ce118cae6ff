#include "genfrac/operators/test_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "genfrac/error.hpp"
#include "genfrac/format.hpp"
#include "genfrac/numerics/differentiate.hpp"
#include "genfrac/numerics/taylor.hpp"

namespace genfrac::operators {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Below this log-magnitude x^mu e^{-x^d} is treated as zero: e^{-700} is
// still a normal double, so values just inside the support keep full
// relative precision.
constexpr double kUnderflowLog = -700.0;

double power_value(double nu, double x) {
  if (x > 0.0) return std::pow(x, nu);
  if (x == 0.0) return nu > 0.0 ? 0.0 : (nu == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
  return std::numeric_limits<double>::quiet_NaN();
}

double power_derivative(double nu, double x, int order) {
  double coeff = 1.0;
  for (int i = 0; i < order; ++i) coeff *= nu - i;
  if (coeff == 0.0) return 0.0;
  return coeff * power_value(nu - order, x);
}

double exp_power_log(const ExpPower& e, double x) {
  return e.mu * std::log(x) - std::pow(x, e.decay_rho);
}

double exp_power_value(const ExpPower& e, double x) {
  if (x > 0.0) {
    const double lv = exp_power_log(e, x);
    return lv < kUnderflowLog ? 0.0 : std::exp(lv);
  }
  if (x == 0.0) return power_value(e.mu, 0.0);
  return std::numeric_limits<double>::quiet_NaN();
}

double exp_power_support_end(const ExpPower& e) {
  double lo = 1.0;
  if (e.mu > 0.0) lo = std::max(lo, std::pow(e.mu / e.decay_rho, 1.0 / e.decay_rho));
  double hi = 2.0 * lo;
  while (exp_power_log(e, hi) > kUnderflowLog) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (exp_power_log(e, mid) > kUnderflowLog ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

TestFunction::TestFunction(Power p) : rep_(p) {
  if (!std::isfinite(p.nu)) fail(ErrorKind::domain, "power exponent must be finite");
}

TestFunction::TestFunction(TruncatedPower p) : rep_(p), support_end_(p.cutoff) {
  if (!std::isfinite(p.nu)) fail(ErrorKind::domain, "power exponent must be finite");
  if (!(p.cutoff > 0.0) || !std::isfinite(p.cutoff)) {
    fail(ErrorKind::domain, "truncated power cutoff must be positive and finite");
  }
}

TestFunction::TestFunction(ExpPower p) : rep_(p) {
  if (!std::isfinite(p.mu)) fail(ErrorKind::domain, "exp-power exponent must be finite");
  if (!(p.decay_rho > 0.0) || !std::isfinite(p.decay_rho)) {
    fail(ErrorKind::domain, "exp-power decay exponent must be positive");
  }
  support_end_ = exp_power_support_end(p);
}

TestFunction::TestFunction(Tabulated t) : rep_(std::move(t)) {
  const auto& tab = std::get<Tabulated>(rep_);
  if (!tab.fn) fail(ErrorKind::domain, "tabulated function needs a callable");
  support_end_ = tab.support_end;
}

TestFunction TestFunction::tabulated(std::function<double(double)> fn, std::string label) {
  Tabulated t;
  t.fn = std::move(fn);
  t.label = std::move(label);
  return t;
}

double TestFunction::operator()(double x) const {
  return std::visit(
      Overloaded{
          [x](const Power& p) { return power_value(p.nu, x); },
          [x](const TruncatedPower& p) { return x > p.cutoff ? 0.0 : power_value(p.nu, x); },
          [x](const ExpPower& e) { return exp_power_value(e, x); },
          [x](const Tabulated& t) { return t.fn(x); },
      },
      rep_);
}

double TestFunction::derivative(double x, int order) const {
  if (order < 0) fail(ErrorKind::domain, "derivative order must be >= 0");
  if (order == 0) return (*this)(x);
  return std::visit(
      Overloaded{
          [&](const Power& p) { return power_derivative(p.nu, x, order); },
          [&](const TruncatedPower& p) {
            return x > p.cutoff ? 0.0 : power_derivative(p.nu, x, order);
          },
          [&](const ExpPower& e) {
            if (!(x > 0.0)) fail(ErrorKind::domain, "exp-power derivatives need x > 0");
            if (exp_power_log(e, x) < kUnderflowLog) return 0.0;
            using numerics::TaylorSeries;
            const auto n = static_cast<std::size_t>(order);
            const TaylorSeries lx = log(TaylorSeries::variable(n, x));
            const TaylorSeries series = exp(e.mu * lx - exp(e.decay_rho * lx));
            return series.derivative(n);
          },
          [&](const Tabulated& t) {
            if (t.derivative) return t.derivative(x, order);
            if (order > 2) {
              fail(ErrorKind::domain,
                   "tabulated function without derivative callback supports order <= 2");
            }
            const double scale = x > 0.0 ? x : 1.0;
            return numerics::differentiate(t.fn, x, order, scale);
          },
      },
      rep_);
}

std::optional<double> TestFunction::origin_exponent() const {
  return std::visit(Overloaded{
                        [](const Power& p) -> std::optional<double> { return p.nu; },
                        [](const TruncatedPower& p) -> std::optional<double> { return p.nu; },
                        [](const ExpPower& e) -> std::optional<double> { return e.mu; },
                        [](const Tabulated&) -> std::optional<double> { return std::nullopt; },
                    },
                    rep_);
}

bool TestFunction::has_jump() const { return std::holds_alternative<TruncatedPower>(rep_); }

bool TestFunction::decays() const {
  return std::visit(Overloaded{
                        [](const Power&) { return false; },
                        [](const TruncatedPower&) { return true; },
                        [](const ExpPower&) { return true; },
                        [](const Tabulated& t) { return t.decays || t.support_end.has_value(); },
                    },
                    rep_);
}

Strip TestFunction::mellin_strip() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(Overloaded{
                        [](const Power&) { return Strip{0.0, 0.0}; },
                        [](const TruncatedPower& p) { return Strip{-p.nu, inf}; },
                        [](const ExpPower& e) { return Strip{-e.mu, inf}; },
                        [](const Tabulated& t) { return t.strip.value_or(Strip{}); },
                    },
                    rep_);
}

std::string TestFunction::describe() const {
  return std::visit(
      Overloaded{
          [](const Power& p) { return "power:" + format_shortest(p.nu); },
          [](const TruncatedPower& p) {
            return "truncpower:" + format_shortest(p.nu) + "," + format_shortest(p.cutoff);
          },
          [](const ExpPower& e) {
            return "exppower:" + format_shortest(e.mu) + "," + format_shortest(e.decay_rho);
          },
          [](const Tabulated& t) { return t.label; },
      },
      rep_);
}

}  // namespace genfrac::operators
