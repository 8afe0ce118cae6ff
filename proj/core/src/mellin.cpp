#include "genfrac/mellin/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "genfrac/error.hpp"
#include "genfrac/numerics/differentiate.hpp"
#include "genfrac/operators/fractional.hpp"

namespace genfrac::mellin {
namespace {

using numerics::QuadResult;
using operators::Interval;
using operators::Strip;

constexpr double kTiny = 1e-300;
// Boundary samples must stay below this fraction of |rhs|.
constexpr double kBoundaryTol = 1e-3;
// Composite integrands (operators evaluated by quadrature and finite
// differences) carry noise well above 1e-12; the outer transform is refined
// only to this level.
constexpr double kCompositeTol = 1e-7;

QuadratureConfig composite(const QuadratureConfig& cfg) {
  QuadratureConfig out = cfg;
  out.target_rel_tol = std::max(cfg.target_rel_tol, kCompositeTol);
  return out;
}

std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(6);
  if (z.imag() == 0.0) {
    os << z.real();
  } else {
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  }
  return os.str();
}

IdentityReport skipped(std::string label, IdentityStatus status, std::string note) {
  IdentityReport r;
  r.label = std::move(label);
  r.status = status;
  r.strip_condition_met = status != IdentityStatus::strip_violation;
  r.note = std::move(note);
  return r;
}

IdentityReport evaluated(std::string label, Complex lhs, Complex rhs, std::string note = {}) {
  IdentityReport r;
  r.label = std::move(label);
  r.lhs = lhs;
  r.rhs = rhs;
  r.rel_residual = relative_residual(lhs, rhs);
  r.strip_condition_met = true;
  r.status = IdentityStatus::evaluated;
  r.note = std::move(note);
  return r;
}

template <class T>
QuadResult<T> transform(const std::function<double(double)>& g, Complex s,
                        std::optional<double> support_end, const QuadratureConfig& cfg,
                        double lower = 0.0) {
  const double sigma_m1 = s.real() - 1.0;
  const double t = s.imag();
  auto integrand = [&](double x) -> T {
    const double v = g(x);
    if (v == 0.0) return T{};
    const double lx = std::log(x);
    const double mag = std::exp(sigma_m1 * lx + std::log(std::abs(v)));
    const double signed_mag = v < 0.0 ? -mag : mag;
    if constexpr (std::is_same_v<T, double>) {
      return signed_mag;
    } else {
      return T(signed_mag * std::cos(t * lx), signed_mag * std::sin(t * lx));
    }
  };
  if (support_end) return numerics::tanh_sinh<T>(integrand, lower, *support_end, cfg);
  return numerics::exp_sinh<T>(integrand, lower, cfg);
}

// Transform of g, which vanishes on (0, lower).
Complex transform_from(const std::function<double(double)>& g, Complex s, double lower,
                       std::optional<double> support_end, const QuadratureConfig& cfg) {
  if (support_end && *support_end <= lower) return 0.0;
  if (s.imag() == 0.0) return transform<double>(g, s, support_end, cfg, lower).value;
  return transform<Complex>(g, s, support_end, cfg, lower).value;
}

bool in_strip(const Strip& strip, double sigma) { return strip.contains(sigma); }

}  // namespace

StripPoint StripPoint::for_function(const TestFunction& f, Complex s) {
  const Strip strip = f.mellin_strip();
  return {s, strip.lo, strip.hi};
}

std::string_view to_string(IdentityStatus status) {
  switch (status) {
    case IdentityStatus::evaluated: return "evaluated";
    case IdentityStatus::strip_violation: return "strip-violation";
    case IdentityStatus::boundary_nonvanishing: return "boundary-nonvanishing";
    case IdentityStatus::inapplicable: return "inapplicable";
  }
  return "unknown";
}

double relative_residual(Complex lhs, Complex rhs) {
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), kTiny);
}

Complex mellin_callable(const std::function<double(double)>& g, Complex s,
                        std::optional<double> support_end, const QuadratureConfig& cfg) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    fail(ErrorKind::domain, "Mellin variable must be finite");
  }
  if (s.imag() == 0.0) return transform<double>(g, s, support_end, cfg).value;
  return transform<Complex>(g, s, support_end, cfg).value;
}

Complex mellin_numeric(const TestFunction& f, const StripPoint& sp, const QuadratureConfig& cfg) {
  const Strip strip = f.mellin_strip();
  if (!sp.admissible() || !strip.contains(sp.s.real())) {
    std::ostringstream os;
    os << "Re(s) = " << sp.s.real() << " outside the strip <" << strip.lo << ", " << strip.hi
       << "> of " << f.describe();
    fail(ErrorKind::domain, os.str());
  }
  return mellin_callable([&f](double x) { return f(x); }, sp.s, f.support_end(), cfg);
}

Complex mt1_factor(Complex s, double alpha, double rho) {
  const Complex z = 1.0 - s / rho;
  return numerics::gamma_ratio(z - alpha, z) / std::pow(rho, alpha);
}

Complex mt2_factor(Complex s, double alpha, double rho) {
  const Complex z = s / rho;
  return numerics::gamma_ratio(z, z + alpha) / std::pow(rho, alpha);
}

Complex mtd1_factor(Complex s, double alpha, double rho) {
  const Complex z = 1.0 - s / rho;
  return std::pow(rho, alpha) * numerics::gamma_ratio(z + alpha, z);
}

Complex mtd2_factor(Complex s, double alpha, double rho) {
  const Complex z = s / rho;
  return std::pow(rho, alpha) * numerics::gamma_ratio(z, z - alpha);
}

double mt1_factor_small_rho(double s, double alpha, double rho) {
  if (!(s < 0.0)) fail(ErrorKind::domain, "small-rho factor needs real s < 0");
  return numerics::gamma_ratio_asymptotic(-s / rho, 1.0 - alpha, 1.0) * std::pow(rho, -alpha);
}

IdentityReport check_integral_identity(const TestFunction& f, const Order& ord,
                                       const StripPoint& sp, Side side,
                                       const QuadratureConfig& cfg,
                                       const IntegralIdentityOptions& opts) {
  const double alpha = ord.alpha();
  const double rho = ord.rho();
  const Complex s = sp.s;
  const bool left = side == Side::left;
  const std::string label = left ? "MT1" : "MT2";
  const Strip strip = f.mellin_strip();
  const Complex shifted = s + alpha * rho;

  if (left) {
    const double cond = s.real() / rho + alpha;
    if (!(cond < 1.0)) {
      return skipped(label, IdentityStatus::strip_violation,
                     "Re(s/rho + alpha) = " + fmt(cond) + " >= 1");
    }
  } else {
    const double cond = s.real() / rho;
    if (!(cond > 0.0)) {
      return skipped(label, IdentityStatus::strip_violation, "Re(s/rho) = " + fmt(cond) + " <= 0");
    }
  }
  if (!sp.admissible() || !in_strip(strip, shifted.real())) {
    return skipped(label, IdentityStatus::strip_violation,
                   "Re(s + alpha rho) = " + fmt(shifted.real()) + " outside the strip of f");
  }

  const QuadratureConfig outer = composite(cfg);
  Complex lhs;
  Complex rhs;
  std::string note;
  if (left) {
    const double a = opts.lower;
    const auto gfi = operators::integral_function(f, ord, Interval::left(a), cfg);
    // the left integral never vanishes identically, and is zero below a
    lhs = transform_from(gfi, s, a, std::nullopt, outer);
    if (a > 0.0) note = "a > 0: f restricted to [a, inf)";
    rhs = mt1_factor(s, alpha, rho) *
          transform_from([&f](double x) { return f(x); }, shifted, a, f.support_end(), cfg);
  } else {
    const auto gfi = operators::integral_function(f, ord, Interval::right(), cfg);
    lhs = mellin_callable(gfi, s, f.support_end(), outer);
    rhs = mt2_factor(s, alpha, rho) * mellin_numeric(f, {shifted, strip.lo, strip.hi}, cfg);
  }
  return evaluated(label, lhs, rhs, note);
}

IdentityReport check_derivative_identity(const TestFunction& f, const Order& ord,
                                         const StripPoint& sp, Side side,
                                         const QuadratureConfig& cfg) {
  const double alpha = ord.alpha();
  const double rho = ord.rho();
  const Complex s = sp.s;
  const bool left = side == Side::left;
  const std::string label = left ? "MTD1" : "MTD2";
  if (!(alpha < 1.0)) {
    return skipped(label, IdentityStatus::inapplicable, "derivative identity needs 0 < alpha < 1");
  }
  const Strip strip = f.mellin_strip();
  const Complex shifted = s - alpha * rho;
  if (left) {
    const double cond = s.real() / rho;
    if (!(cond < 1.0)) {
      return skipped(label, IdentityStatus::strip_violation, "Re(s/rho) = " + fmt(cond) + " >= 1");
    }
  } else {
    const double cond = s.real() / rho - alpha;
    if (!(cond > 0.0)) {
      return skipped(label, IdentityStatus::strip_violation,
                     "Re(s/rho - alpha) = " + fmt(cond) + " <= 0");
    }
  }
  if (!sp.admissible() || !in_strip(strip, shifted.real())) {
    return skipped(label, IdentityStatus::strip_violation,
                   "Re(s - alpha rho) = " + fmt(shifted.real()) + " outside the strip of f");
  }

  const Complex factor = left ? mtd1_factor(s, alpha, rho) : mtd2_factor(s, alpha, rho);
  const Complex rhs = factor * mellin_numeric(f, {shifted, strip.lo, strip.hi}, cfg);

  // Boundary terms x^{s-rho} I^{1-alpha} f at both ends.
  const Order inner(1.0 - alpha, rho);
  const auto iv = left ? Interval::left(0.0) : Interval::right();
  const auto gfi = operators::integral_function(f, inner, iv, cfg);
  double worst = 0.0;
  for (const double x : {1e-4, 1e4}) {
    const double term = std::pow(x, s.real() - rho) * std::abs(gfi(x));
    worst = std::max(worst, term);
  }
  if (!(worst <= kBoundaryTol * std::abs(rhs))) {
    IdentityReport r = skipped(label, IdentityStatus::boundary_nonvanishing,
                               "sampled boundary term " + fmt(worst) + " exceeds " +
                                   fmt(kBoundaryTol) + " |rhs|");
    r.rhs = rhs;
    return r;
  }

  std::function<double(double)> gfd;
  if (left) {
    gfd = [&](double x) {
      return operators::gfd_left(f, ord, Interval::left(0.0), x, cfg).value;
    };
  } else {
    gfd = [&](double x) { return operators::gfd_right(f, ord, Interval::right(), x, cfg).value; };
  }
  const auto end = left ? std::optional<double>{} : f.support_end();
  const Complex lhs = mellin_callable(gfd, s, end, composite(cfg));
  return evaluated(label, lhs, rhs, "boundary terms <= " + fmt(worst));
}

std::vector<IdentityReport> check_transform_properties(const TestFunction& f,
                                                       const StripPoint& sp,
                                                       const QuadratureConfig& cfg,
                                                       const PropertyOptions& opts) {
  std::vector<IdentityReport> out;
  const Strip strip = f.mellin_strip();
  const Complex s = sp.s;
  const auto end = f.support_end();
  auto fx = [&f](double x) { return f(x); };

  // 2: M[x^nu f](s) = M[f](s + nu)
  {
    const Complex shifted = s + opts.nu;
    if (!sp.admissible() || !strip.contains(shifted.real())) {
      out.push_back(skipped("P2", IdentityStatus::strip_violation,
                            "Re(s + nu) outside the strip of f"));
    } else {
      const double nu = opts.nu;
      auto g = [&f, nu](double x) {
        const double v = f(x);
        return v == 0.0 ? 0.0 : std::pow(x, nu) * v;
      };
      out.push_back(evaluated("P2", mellin_callable(g, s, end, cfg),
                              mellin_callable(fx, shifted, end, cfg)));
    }
  }

  // 3: M[f(x^p)](s) = (1/p) M[f](s/p)
  {
    const double p = opts.power;
    const Complex scaled = s / p;
    if (!(p > 0.0)) {
      out.push_back(skipped("P3", IdentityStatus::inapplicable, "power must be > 0"));
    } else if (!sp.admissible() || !strip.contains(scaled.real())) {
      out.push_back(skipped("P3", IdentityStatus::strip_violation,
                            "Re(s/p) outside the strip of f"));
    } else {
      auto g = [&f, p](double x) { return f(std::pow(x, p)); };
      std::optional<double> g_end;
      if (end) g_end = std::pow(*end, 1.0 / p);
      out.push_back(evaluated("P3", mellin_callable(g, s, g_end, cfg),
                              mellin_callable(fx, scaled, end, cfg) / p));
    }
  }

  // 5: M[x f'](s) = -s M[f](s)
  {
    if (f.has_jump()) {
      out.push_back(skipped("P5", IdentityStatus::inapplicable,
                            "f has a jump; x f' carries a point mass"));
    } else if (!sp.admissible() || !strip.contains(s.real())) {
      out.push_back(skipped("P5", IdentityStatus::strip_violation, "Re(s) outside the strip of f"));
    } else {
      auto g = [&fx](double x) { return x * numerics::differentiate(fx, x, 1, x); };
      out.push_back(evaluated("P5", mellin_callable(g, s, end, composite(cfg)),
                              -s * mellin_callable(fx, s, end, cfg)));
    }
  }

  // 6: M[int_0^x f](s) = -(1/s) M[f](s + 1), for -1 - lo < Re s < 0
  {
    const Complex shifted = s + 1.0;
    if (!(s.real() < 0.0) || !strip.contains(shifted.real())) {
      out.push_back(skipped("P6", IdentityStatus::strip_violation,
                            "needs Re(s) < 0 and Re(s) + 1 inside the strip of f"));
    } else {
      auto big_f = [&f, &fx, &cfg, end](double x) {
        const double upper = end ? std::min(x, *end) : x;
        return numerics::tanh_sinh<double>(fx, 0.0, upper, cfg).value;
      };
      out.push_back(evaluated("P6", mellin_callable(big_f, s, std::nullopt, composite(cfg)),
                              -mellin_callable(fx, shifted, end, cfg) / s));
    }
  }
  return out;
}

IdentityReport mth_derivative_transform_check(const TestFunction& phi, int m,
                                              const StripPoint& sp,
                                              const QuadratureConfig& cfg) {
  if (m != 1) fail(ErrorKind::domain, "derivative transform check supports m = 1");
  const std::string label = "MD1";
  const Strip strip = phi.mellin_strip();
  const Complex s = sp.s;
  const Complex shifted = s - 1.0;
  if (phi.has_jump()) {
    return skipped(label, IdentityStatus::inapplicable, "phi has a jump; phi' is not a function");
  }
  if (!sp.admissible() || !strip.contains(shifted.real())) {
    return skipped(label, IdentityStatus::strip_violation,
                   "Re(s) - 1 outside the strip of phi");
  }
  const auto end = phi.support_end();
  auto fx = [&phi](double x) { return phi(x); };
  const Complex rhs = -(s - 1.0) * mellin_callable(fx, shifted, end, cfg);

  double worst = 0.0;
  for (const double x : {1e-4, 1e4}) {
    worst = std::max(worst, std::pow(x, s.real() - 1.0) * std::abs(phi(x)));
  }
  if (!(worst <= kBoundaryTol * std::abs(rhs))) {
    IdentityReport r = skipped(label, IdentityStatus::boundary_nonvanishing,
                               "sampled boundary term " + fmt(worst) + " exceeds " +
                                   fmt(kBoundaryTol) + " |rhs|");
    r.rhs = rhs;
    return r;
  }
  auto d = [&fx](double x) { return numerics::differentiate(fx, x, 1, x); };
  const Complex lhs = mellin_callable(d, s, end, composite(cfg));
  return evaluated(label, lhs, rhs, "boundary terms <= " + fmt(worst));
}

}  // namespace genfrac::mellin
