#include "genfrac/operators/classical.hpp"

#include <cmath>
#include <sstream>

#include "genfrac/error.hpp"
#include "genfrac/numerics/differentiate.hpp"
#include "genfrac/numerics/gamma.hpp"

namespace genfrac::operators {
namespace {

struct Frozen {
  int jacobi_order = 0;
  int de_level = 0;
};

struct Evaluated {
  double value = 0.0;
  double abs_err = 0.0;
  Frozen frozen;
};

double inv_gamma(double a) { return 1.0 / numerics::gamma(a); }

// The singular third next to x goes to Gauss-Jacobi in s = x - t, the rest
// to tanh-sinh in t.
Evaluated rl_integral(const TestFunction& f, double alpha, double a, double x,
                      const numerics::QuadratureConfig& cfg, const Frozen& fz) {
  Evaluated out;
  if (!(x > a)) return out;
  const double c = inv_gamma(alpha);
  auto kernel = [&](double t) {
    const double ft = f(t);
    return ft == 0.0 ? 0.0 : std::pow(x - t, alpha - 1.0) * ft;
  };
  if (const auto end = f.support_end(); end && *end < x) {
    // The kernel is regular on the support.
    if (!(*end > a)) return out;
    const auto piece = numerics::tanh_sinh<double>(kernel, a, *end, cfg, fz.de_level);
    out.value = c * piece.value;
    out.abs_err = std::abs(c) * piece.abs_err;
    out.frozen = {0, piece.resolution};
    return out;
  }
  const double width = (x - a) / 3.0;
  const auto near = numerics::integrate_endpoint_weighted(
      [&](double s) { return f(x - s); }, width, alpha - 1.0, cfg, fz.jacobi_order);
  const auto far = numerics::tanh_sinh<double>(kernel, a, x - width, cfg, fz.de_level);
  out.value = c * (near.value + far.value);
  out.abs_err = std::abs(c) * (near.abs_err + far.abs_err);
  out.frozen = {near.resolution, far.resolution};
  return out;
}

// t = log(x/tau) on [0, L/2] by Gauss-Jacobi, tau in (a, sqrt(a x)) by tanh-sinh.
Evaluated hadamard_integral(const TestFunction& f, double alpha, double a, double x,
                            const numerics::QuadratureConfig& cfg, const Frozen& fz) {
  Evaluated out;
  if (!(x > a)) return out;
  const double half_log = 0.5 * std::log(x / a);
  const auto near = numerics::integrate_endpoint_weighted(
      [&](double t) { return f(x * std::exp(-t)); }, half_log, alpha - 1.0, cfg, fz.jacobi_order);
  const auto far = numerics::tanh_sinh<double>(
      [&](double tau) {
        const double ft = f(tau);
        return ft == 0.0 ? 0.0 : std::pow(std::log(x / tau), alpha - 1.0) * ft / tau;
      },
      a, std::sqrt(a) * std::sqrt(x), cfg, fz.de_level);
  const double c = inv_gamma(alpha);
  out.value = c * (near.value + far.value);
  out.abs_err = std::abs(c) * (near.abs_err + far.abs_err);
  out.frozen = {near.resolution, far.resolution};
  return out;
}

}  // namespace

std::string_view to_string(Classical which) {
  switch (which) {
    case Classical::rl_integral: return "RL-int";
    case Classical::hadamard_integral: return "Hadamard-int";
    case Classical::rl_derivative: return "RL-der";
    case Classical::hadamard_derivative: return "Hadamard-der";
  }
  return "unknown";
}

OperatorResult limit_emulation(const TestFunction& f, double alpha, Classical which, double a,
                               double x, const numerics::QuadratureConfig& cfg) {
  cfg.validate();
  if (!(alpha > 0.0) || !std::isfinite(alpha)) fail(ErrorKind::domain, "alpha must be > 0");
  if (!(a >= 0.0) || !std::isfinite(a)) fail(ErrorKind::domain, "a must be finite and >= 0");
  if (!(x > a) || !std::isfinite(x)) fail(ErrorKind::domain, "x must exceed a");
  const bool hadamard =
      which == Classical::hadamard_integral || which == Classical::hadamard_derivative;
  if (hadamard && a == 0.0) {
    fail(ErrorKind::domain, "Hadamard operators need a > 0 (log kernel at the origin)");
  }
  auto integral = [&](double beta, double t, const Frozen& fz) {
    return hadamard ? hadamard_integral(f, beta, a, t, cfg, fz) : rl_integral(f, beta, a, t, cfg, fz);
  };

  if (which == Classical::rl_integral || which == Classical::hadamard_integral) {
    const Evaluated e = integral(alpha, x, Frozen{});
    const double rel = e.value == 0.0 ? 0.0 : e.abs_err / std::abs(e.value);
    return {e.value, rel, Path::quadrature};
  }

  const int n = static_cast<int>(std::ceil(alpha));
  if (n > 2) fail(ErrorKind::domain, "classical derivatives are supported for alpha <= 2");
  const double beta = n - alpha;
  double d1 = 0.0;
  double d2 = 0.0;
  double rel = 0.0;
  if (beta == 0.0) {
    d1 = f.derivative(x, 1);
    if (n == 2) d2 = f.derivative(x, 2);
  } else {
    const Evaluated probe = integral(beta, x, Frozen{});
    auto g = [&](double t) { return integral(beta, t, probe.frozen).value; };
    const double scale = std::min(std::max(1.0, x), x - a);
    const auto first = numerics::differentiate_detailed(g, x, 1, scale);
    d1 = first.value;
    rel = probe.value == 0.0 ? 0.0 : probe.abs_err / std::abs(probe.value);
    if (n == 2) d2 = numerics::differentiate_detailed(g, x, 2, scale).value;
  }
  double value;
  if (!hadamard) {
    value = n == 1 ? d1 : d2;
  } else {
    // (x d/dx)^2 = x d/dx + x^2 d^2/dx^2
    value = n == 1 ? x * d1 : x * d1 + x * x * d2;
  }
  return {value, rel, Path::quadrature};
}

}  // namespace genfrac::operators
