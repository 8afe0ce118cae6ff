#include "genfrac/operators/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "genfrac/combinatorics/delta.hpp"
#include "genfrac/error.hpp"
#include "genfrac/numerics/differentiate.hpp"
#include "genfrac/numerics/gamma.hpp"

namespace genfrac::operators {
namespace {

using numerics::QuadResult;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Quadrature resolution of one kernel integral; zero fields mean adaptive.
struct Resolution {
  int jacobi_order = 0;
  int de_level = 0;
};

struct KernelIntegral {
  double value = 0.0;
  double abs_err = 0.0;
  Resolution resolution;

  double est_rel_err() const {
    if (value == 0.0) return abs_err == 0.0 ? 0.0 : kInf;
    return abs_err / std::abs(value);
  }
};

double log_gamma_real(double x) { return numerics::log_gamma(numerics::Complex(x, 0.0)).real(); }

void accumulate(KernelIntegral& out, const QuadResult<double>& piece, double prefactor) {
  out.value += prefactor * piece.value;
  out.abs_err += std::abs(prefactor) * piece.abs_err;
}

// tau^{rho-1} f(tau) |x^rho - tau^rho|^{beta-1}, away from tau = x. Formed
// in logs: the gap underflows for tiny x while its negative power does not.
// log(t/x), through log1p when t is close to x where the difference of
// logarithms would cancel.
double log_ratio(double t, double x) {
  const double d = t - x;
  return std::abs(d) < 0.5 * x ? std::log1p(d / x) : std::log(t) - std::log(x);
}

double tau_integrand(const TestFunction& f, double beta, double rho, double x, double tau) {
  const double ft = f(tau);
  if (ft == 0.0) return 0.0;
  const double log_tau = std::log(tau);
  double log_f = std::log(std::abs(ft));
  if (std::isinf(ft)) {
    // Overflow of a singular power next to the origin; the product with the
    // tau^{rho-1} factor may still be representable.
    const auto p = f.origin_exponent();
    if (!p) return ft;
    log_f = *p * log_tau;
  }
  const double log_gap =
      x > 0.0 ? rho * std::log(x) + std::log(std::abs(std::expm1(rho * log_ratio(tau, x))))
              : rho * log_tau;
  const double mag = std::exp((rho - 1.0) * log_tau + (beta - 1.0) * log_gap + log_f);
  return ft < 0.0 ? -mag : mag;
}

// Left kernel integral of order beta > 0 on [a, x].
KernelIntegral left_integral(const TestFunction& f, double beta, double rho, double a, double x,
                             const QuadratureConfig& cfg, const Resolution& fixed) {
  KernelIntegral out;
  if (!(x > a)) return out;
  const auto end = f.support_end();
  if (end && *end <= a) return out;

  const double lg = log_gamma_real(beta);
  const double pref_tau = std::exp((1.0 - beta) * std::log(rho) - lg);
  auto in_tau = [&](double tau) { return tau_integrand(f, beta, rho, x, tau); };

  if (end && *end < x) {
    const auto piece = numerics::tanh_sinh<double>(in_tau, a, *end, cfg, fixed.de_level);
    accumulate(out, piece, pref_tau);
    out.resolution.de_level = piece.resolution;
    return out;
  }

  // w = 1 - (tau/x)^rho on [0, w_a]; the kernel becomes w^{beta-1}. The
  // piece spans at most tau in [max(x/2, x-1), x], where f is smooth on the
  // scale of the rule.
  const double w0 = a > 0.0 ? -std::expm1(rho * log_ratio(a, x)) : 1.0;
  double w_a = std::min(0.5 * w0, -std::expm1(-rho * std::numbers::ln2));
  if (x > 2.0) w_a = std::min(w_a, -std::expm1(rho * std::log1p(-1.0 / x)));
  const double tau_a = x * std::exp(std::log1p(-w_a) / rho);
  const double pref_w = std::exp(-beta * std::log(rho) + rho * beta * std::log(x) - lg);
  auto in_w = [&](double w) { return f(x * std::exp(std::log1p(-w) / rho)); };
  const auto near = numerics::integrate_endpoint_weighted(in_w, w_a, beta - 1.0, cfg,
                                                          fixed.jacobi_order);
  accumulate(out, near, pref_w);
  out.resolution.jacobi_order = near.resolution;

  if (a > 0.0 && w0 > w_a) {
    // Stay in w: tau-abscissae on a range short next to its magnitude
    // would be rounded.
    auto in_w_far = [&](double w) {
      const double v = in_w(w);
      return v == 0.0 ? 0.0 : v * std::pow(w, beta - 1.0);
    };
    const auto far = numerics::tanh_sinh<double>(in_w_far, w_a, w0, cfg, fixed.de_level);
    accumulate(out, far, pref_w);
    out.resolution.de_level = far.resolution;
  } else if (a == 0.0 && tau_a > a) {
    const auto far = numerics::tanh_sinh<double>(in_tau, a, tau_a, cfg, fixed.de_level);
    accumulate(out, far, pref_tau);
    out.resolution.de_level = far.resolution;
  }
  return out;
}

// Right kernel integral of order beta > 0 on [x, b].
KernelIntegral right_integral(const TestFunction& f, double beta, double rho, double x, double b,
                              const QuadratureConfig& cfg, const Resolution& fixed) {
  KernelIntegral out;
  double upper = b;
  if (const auto end = f.support_end()) upper = std::min(upper, *end);
  if (!(upper > x)) return out;

  const double lg = log_gamma_real(beta);
  const double pref_tau = std::exp((1.0 - beta) * std::log(rho) - lg);
  // When x^rho is not a normal number the v-substitution breaks down, and
  // x^rho is negligible against tau^rho except on (x, 2x), whose share is of
  // that same negligible size: use the x = 0 kernel over [x, b].
  const double xr = std::pow(x, rho);
  const bool resolved = xr >= std::numeric_limits<double>::min() && std::isfinite(xr);
  const double x_kernel = resolved ? x : 0.0;
  auto in_tau = [&](double tau) { return tau_integrand(f, beta, rho, x_kernel, tau); };

  double tau_a = x;
  if (resolved) {
    // v = tau^rho - x^rho on [0, v_a]; the kernel becomes v^{beta-1}.
    const double v_end = std::isinf(upper) ? kInf : xr * std::expm1(rho * log_ratio(upper, x));
    double v_a = std::min(0.5 * v_end, xr * std::expm1(rho * std::numbers::ln2));
    if (x > 1.0) v_a = std::min(v_a, xr * std::expm1(rho * std::log1p(1.0 / x)));
    tau_a = x * std::exp(std::log1p(v_a / xr) / rho);
    const double pref_v = std::exp(-beta * std::log(rho) - lg);
    auto in_v = [&](double v) { return f(x * std::exp(std::log1p(v / xr) / rho)); };
    const auto near = numerics::integrate_endpoint_weighted(in_v, v_a, beta - 1.0, cfg,
                                                            fixed.jacobi_order);
    accumulate(out, near, pref_v);
    out.resolution.jacobi_order = near.resolution;
    if (!std::isinf(upper)) {
      if (v_end > v_a) {
        auto in_v_far = [&](double v) {
          const double fv = in_v(v);
          return fv == 0.0 ? 0.0 : fv * std::pow(v, beta - 1.0);
        };
        const auto far = numerics::tanh_sinh<double>(in_v_far, v_a, v_end, cfg, fixed.de_level);
        accumulate(out, far, pref_v);
        out.resolution.de_level = far.resolution;
      }
      return out;
    }
  }

  if (std::isinf(upper)) {
    const auto far = numerics::exp_sinh<double>(in_tau, tau_a, cfg, fixed.de_level);
    accumulate(out, far, pref_tau);
    out.resolution.de_level = far.resolution;
  } else if (upper > tau_a) {
    const auto far = numerics::tanh_sinh<double>(in_tau, tau_a, upper, cfg, fixed.de_level);
    accumulate(out, far, pref_tau);
    out.resolution.de_level = far.resolution;
  }
  return out;
}

std::string describe_point(const char* what, double x) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (x = " << x << ")";
  return os.str();
}

void check_left(const TestFunction& f, double beta, double rho, const Interval& iv, double x) {
  iv.validate();
  if (iv.side != Side::left) fail(ErrorKind::domain, "left-sided operator needs a left interval");
  if (!std::isfinite(x) || !(x > iv.a)) {
    fail(ErrorKind::domain, describe_point("x must exceed the lower limit a", x));
  }
  if (beta > 0.0 && iv.a == 0.0) {
    if (const auto nu = f.origin_exponent(); nu && *nu <= -rho) {
      std::ostringstream os;
      os << "integral diverges at 0: exponent " << *nu << " <= -rho = " << -rho;
      fail(ErrorKind::divergence, os.str());
    }
  }
}

void check_right(const TestFunction& f, double beta, double rho, const Interval& iv, double x) {
  iv.validate();
  if (iv.side != Side::right) fail(ErrorKind::domain, "right-sided operator needs a right interval");
  if (!std::isfinite(x) || x < 0.0 || !(x < iv.b)) {
    fail(ErrorKind::domain, describe_point("x must satisfy 0 <= x < b", x));
  }
  if (beta > 0.0 && std::isinf(iv.b) && !f.decays()) {
    fail(ErrorKind::divergence, "b = inf needs a decaying function, got " + f.describe());
  }
  if (beta > 0.0 && x == 0.0) {
    if (const auto nu = f.origin_exponent(); nu && *nu + rho * beta <= 0.0) {
      std::ostringstream os;
      os << "integral diverges at 0: exponent " << *nu << " + rho*alpha <= 0";
      fail(ErrorKind::divergence, os.str());
    }
  }
}

OperatorResult to_result(const KernelIntegral& k) {
  return {k.value, k.est_rel_err(), Path::quadrature};
}

// (sign x^{1-rho} d/dx)^n g with g the integral of order n - alpha.
OperatorResult derivative(const TestFunction& f, const Order& ord, const Interval& iv, double x,
                          const QuadratureConfig& cfg) {
  const int n = ord.n();
  if (n > 2) fail(ErrorKind::domain, "generalized derivatives are supported for alpha <= 2");
  const double rho = ord.rho();
  const double beta = n - ord.alpha();
  const bool left = iv.side == Side::left;
  if (left) {
    check_left(f, beta, rho, iv, x);
  } else {
    check_right(f, beta, rho, iv, x);
    if (!(x > 0.0)) fail(ErrorKind::domain, describe_point("right-sided derivative needs x > 0", x));
  }

  std::vector<double> g_derivs(static_cast<std::size_t>(n) + 1, 0.0);
  double rel_err = 0.0;
  if (beta == 0.0) {
    for (int j = 1; j <= n; ++j) g_derivs[static_cast<std::size_t>(j)] = f.derivative(x, j);
  } else {
    auto eval = [&](double t, const Resolution& res) {
      return left ? left_integral(f, beta, rho, iv.a, t, cfg, res)
                  : right_integral(f, beta, rho, t, iv.b, cfg, res);
    };
    const KernelIntegral probe = eval(x, Resolution{});
    const Resolution frozen = probe.resolution;
    auto g = [&](double t) { return eval(t, frozen).value; };
    double scale = std::min(std::max(1.0, x), left ? x - iv.a : x);
    if (!left) scale = std::min(scale, iv.b - x);
    rel_err = probe.est_rel_err();
    for (int j = 1; j <= n; ++j) {
      const auto d = numerics::differentiate_detailed(g, x, j, scale);
      g_derivs[static_cast<std::size_t>(j)] = d.value;
      if (d.value != 0.0) rel_err = std::max(rel_err, d.abs_err / std::abs(d.value));
    }
  }

  const double k = 1.0 - rho;
  const auto row = combinatorics::delta_coefficients(k, n);
  double value = 0.0;
  for (int j = 1; j <= n; ++j) {
    value += row.at(j) * std::pow(x, n * (k - 1.0) + j) * g_derivs[static_cast<std::size_t>(j)];
  }
  if (!left && n % 2 == 1) value = -value;
  if (!std::isfinite(value)) fail(ErrorKind::nonfinite, describe_point("derivative is not finite", x));
  return {value, rel_err, Path::quadrature};
}

}  // namespace

OperatorResult gfi_left(const TestFunction& f, const Order& ord, const Interval& iv, double x,
                        const QuadratureConfig& cfg) {
  cfg.validate();
  check_left(f, ord.alpha(), ord.rho(), iv, x);
  return to_result(left_integral(f, ord.alpha(), ord.rho(), iv.a, x, cfg, Resolution{}));
}

OperatorResult gfi_right(const TestFunction& f, const Order& ord, const Interval& iv, double x,
                         const QuadratureConfig& cfg) {
  cfg.validate();
  check_right(f, ord.alpha(), ord.rho(), iv, x);
  return to_result(right_integral(f, ord.alpha(), ord.rho(), x, iv.b, cfg, Resolution{}));
}

OperatorResult gfd_left(const TestFunction& f, const Order& ord, const Interval& iv, double x,
                        const QuadratureConfig& cfg) {
  cfg.validate();
  if (iv.side != Side::left) fail(ErrorKind::domain, "left-sided operator needs a left interval");
  return derivative(f, ord, iv, x, cfg);
}

OperatorResult gfd_right(const TestFunction& f, const Order& ord, const Interval& iv, double x,
                         const QuadratureConfig& cfg) {
  cfg.validate();
  if (iv.side != Side::right) fail(ErrorKind::domain, "right-sided operator needs a right interval");
  return derivative(f, ord, iv, x, cfg);
}

PowerLaw power_closed_form(double nu, const Order& ord) {
  const double rho = ord.rho();
  const double alpha = ord.alpha();
  const double top = 1.0 + nu / rho;
  const double bottom = top - alpha;
  if (numerics::is_gamma_pole(top)) {
    std::ostringstream os;
    os << "1 + nu/rho = " << top << " is a gamma pole";
    fail(ErrorKind::pole, os.str());
  }
  if (numerics::is_gamma_pole(bottom)) {
    std::ostringstream os;
    os << "1 + nu/rho - alpha = " << bottom << " is a gamma pole";
    fail(ErrorKind::pole, os.str());
  }
  const double coefficient = std::pow(rho, alpha) * numerics::gamma_ratio(top, bottom);
  if (!std::isfinite(coefficient)) fail(ErrorKind::overflow, "power-law coefficient overflows");
  return {coefficient, nu - alpha * rho};
}

std::function<double(double)> integral_function(const TestFunction& f, const Order& ord,
                                                const Interval& iv,
                                                const QuadratureConfig& cfg) {
  iv.validate();
  cfg.validate();
  if (iv.side == Side::left) {
    return [f, ord, iv, cfg](double t) {
      return t > iv.a ? gfi_left(f, ord, iv, t, cfg).value : 0.0;
    };
  }
  return [f, ord, iv, cfg](double t) {
    return t < iv.b ? gfi_right(f, ord, iv, t, cfg).value : 0.0;
  };
}

}  // namespace genfrac::operators
