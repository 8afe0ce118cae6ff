#ifndef GENFRAC_NUMERICS_QUADRATURE_HPP_
#define GENFRAC_NUMERICS_QUADRATURE_HPP_

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>
#include <vector>

#include "genfrac/error.hpp"

namespace genfrac::numerics {

enum class RuleKind { gauss_jacobi, double_exponential };

/// Nodes and weights on (-1, 1). `one_minus[i]` and `one_plus[i]` hold
/// 1 - nodes[i] and 1 + nodes[i] to full relative precision, which matters
/// when a rule is mapped onto an interval whose endpoint carries a singular
/// weight.
struct QuadratureRule {
  RuleKind kind = RuleKind::gauss_jacobi;
  double alpha_exp = 0.0;  // exponent of (1 - u)
  double beta_exp = 0.0;   // exponent of (1 + u)
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> one_minus;
  std::vector<double> one_plus;
};

/// Gauss-Jacobi rule for the weight (1-u)^alpha_exp (1+u)^beta_exp on [-1, 1],
/// exact for polynomials of degree 2*order-1. Nodes come from Newton
/// iteration on the three-term recurrence (in the angle variable) started
/// from Chebyshev-type guesses. Rules are cached; the cache is thread-safe.
std::shared_ptr<const QuadratureRule> gauss_jacobi_rule(int order, double alpha_exp,
                                                        double beta_exp);

/// tanh-sinh rule on (-1, 1) with step 2^-level, truncated where weights
/// underflow. Mostly useful for inspection; the adaptive drivers below
/// generate their nodes on the fly.
QuadratureRule tanh_sinh_rule(int level);

enum class CutoffPolicy {
  negligible_tail,  // trim double-exponential tails once terms are negligible
  full_range,       // always sum out to the representable range
};

struct QuadratureConfig {
  double target_rel_tol = 1e-12;
  int max_order = 512;  // cap on Gauss-Jacobi order doubling
  int max_level = 10;   // cap on double-exponential step halving
  CutoffPolicy improper_cutoff_policy = CutoffPolicy::negligible_tail;

  void validate() const;
};

template <class T>
struct QuadResult {
  T value{};
  double abs_err = 0.0;
  int resolution = 0;  // Gauss order or double-exponential level actually used
  long evaluations = 0;

  double est_rel_err() const {
    const double mag = std::abs(value);
    if (mag == 0.0) return abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return abs_err / mag;
  }
};

/// Integral of f over (lower, inf) by the exp-sinh transformation.
/// Handles algebraic singularities at `lower` and algebraic or faster decay.
double integrate_improper(const std::function<double(double)>& f, double lower,
                          const QuadratureConfig& cfg);
QuadResult<double> integrate_improper_detailed(const std::function<double(double)>& f,
                                               double lower, const QuadratureConfig& cfg,
                                               int fixed_level = 0);

/// Integral of f over (lo, hi) by tanh-sinh. Abscissae near either endpoint
/// are formed as lo + d or hi - d, so an integrable singularity at an endpoint
/// at 0 is sampled without cancellation.
QuadResult<double> integrate_finite(const std::function<double(double)>& f, double lo,
                                    double hi, const QuadratureConfig& cfg,
                                    int fixed_level = 0);

/// Integral of w^exponent g(w) over (0, width) by Gauss-Jacobi; g receives
/// w computed as width * (1 - u) / 2 so small w keeps full precision.
QuadResult<double> integrate_endpoint_weighted(const std::function<double(double)>& g,
                                               double width, double exponent,
                                               const QuadratureConfig& cfg,
                                               int fixed_order = 0);

namespace detail {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr int kMinLevel = 3;
inline constexpr double kTrimRatio = 1e-20;
// Changes below this are at the edge of the normal double range and count
// as converged regardless of the relative test.
inline constexpr double kAbsoluteFloor = 1e4 * std::numeric_limits<double>::min();

[[noreturn]] inline void nonfinite_at(double x) {
  std::ostringstream os;
  os.precision(17);
  os << "integrand is not finite at x = " << x;
  fail(ErrorKind::nonfinite, os.str());
}

template <class T>
bool is_finite(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

/// Shared level-refinement driver for double-exponential transforms.
/// `node(t)` returns {x, weight, inside}; `inside` is false when x rounded
/// onto an endpoint and must be skipped.
template <class T, class F, class Node>
QuadResult<T> de_drive(F&& f, Node&& node, double t_max, const QuadratureConfig& cfg,
                       int fixed_level, const char* what) {
  cfg.validate();
  QuadResult<T> out;
  T sum{};
  double abs_sum = 0.0;
  double t_lo = -t_max;
  double t_hi = t_max;
  T previous{};
  bool have_previous = false;
  const int last_level = fixed_level > 0 ? fixed_level : cfg.max_level;

  auto eval_term = [&](double t) -> T {
    const auto [x, w, inside] = node(t);
    if (!inside || w == 0.0) return T{};
    const T fx = f(x);
    ++out.evaluations;
    if (!is_finite(fx)) nonfinite_at(x);
    return fx * w;
  };

  for (int level = 0; level <= last_level; ++level) {
    const double h = std::ldexp(1.0, -level);
    if (level == 0) {
      const int kmax = static_cast<int>(std::floor(t_max));
      for (int k = -kmax; k <= kmax; ++k) {
        const T term = eval_term(static_cast<double>(k));
        sum += term;
        abs_sum += std::abs(term);
      }
    } else {
      // New nodes are the odd multiples of h.
      std::vector<std::pair<double, double>> mags;
      const long kmax = static_cast<long>(std::floor(t_hi / h));
      const long kmin = static_cast<long>(std::ceil(t_lo / h));
      for (long k = kmin; k <= kmax; ++k) {
        if ((k & 1L) == 0) continue;
        const double t = static_cast<double>(k) * h;
        const T term = eval_term(t);
        sum += term;
        const double mag = std::abs(term);
        abs_sum += mag;
        if (level == 1) mags.emplace_back(t, mag);
      }
      if (level == 1 && cfg.improper_cutoff_policy == CutoffPolicy::negligible_tail) {
        double peak = 0.0;
        for (const auto& [t, m] : mags) peak = std::max(peak, m);
        double keep_lo = 0.0;
        double keep_hi = 0.0;
        for (const auto& [t, m] : mags) {
          if (m > kTrimRatio * peak) {
            keep_lo = std::min(keep_lo, t);
            keep_hi = std::max(keep_hi, t);
          }
        }
        t_lo = std::max(-t_max, keep_lo - 1.0);
        t_hi = std::min(t_max, keep_hi + 1.0);
      }
    }
    const T estimate = sum * h;
    out.resolution = level;
    if (have_previous) {
      out.abs_err = std::abs(estimate - previous);
      if (fixed_level <= 0 && level >= kMinLevel) {
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * h * abs_sum;
        if (out.abs_err <= cfg.target_rel_tol * std::abs(estimate) || out.abs_err <= floor ||
            out.abs_err <= kAbsoluteFloor) {
          out.value = estimate;
          return out;
        }
      }
    }
    previous = estimate;
    have_previous = true;
    out.value = estimate;
  }
  if (fixed_level > 0) return out;
  std::ostringstream os;
  os << what << " did not reach relative tolerance " << cfg.target_rel_tol << " within "
     << cfg.max_level << " levels (last change " << out.abs_err << ")";
  fail(ErrorKind::convergence, os.str());
}

struct DeNode {
  double x;
  double weight;
  bool inside;
};

}  // namespace detail

/// tanh-sinh over (lo, hi) for any value type (double or std::complex).
template <class T, class F>
QuadResult<T> tanh_sinh(F&& f, double lo, double hi, const QuadratureConfig& cfg,
                        int fixed_level = 0) {
  if (!(lo < hi)) {
    if (lo == hi) return QuadResult<T>{};
    fail(ErrorKind::domain, "tanh_sinh requires lo < hi");
  }
  const double half = 0.5 * (hi - lo);
  auto node = [lo, hi, half](double t) {
    const double at = std::abs(t);
    const double u = detail::kHalfPi * std::sinh(at);
    const double e2u = std::exp(2.0 * u);
    const double complement = 2.0 / (e2u + 1.0);  // 1 - tanh(u)
    const double cu = std::cosh(u);
    const double weight = half * detail::kHalfPi * std::cosh(at) / (cu * cu);
    const double offset = half * complement;
    double x;
    if (t == 0.0) {
      x = lo + half;
    } else if (t > 0.0) {
      x = hi - offset;
    } else {
      x = lo + offset;
    }
    const bool inside = (x > lo && x < hi) && std::isfinite(weight);
    return detail::DeNode{x, inside ? weight : 0.0, inside};
  };
  return detail::de_drive<T>(std::forward<F>(f), node, 6.0, cfg, fixed_level, "tanh-sinh");
}

/// exp-sinh over (lower, inf) for any value type.
template <class T, class F>
QuadResult<T> exp_sinh(F&& f, double lower, const QuadratureConfig& cfg, int fixed_level = 0) {
  auto node = [lower](double t) {
    const double e = std::exp(detail::kHalfPi * std::sinh(t));
    const double x = lower + e;
    const double weight = detail::kHalfPi * std::cosh(t) * e;
    const bool inside = x > lower && std::isfinite(x) && std::isfinite(weight);
    return detail::DeNode{x, inside ? weight : 0.0, inside};
  };
  return detail::de_drive<T>(std::forward<F>(f), node, 6.5, cfg, fixed_level, "exp-sinh");
}

}  // namespace genfrac::numerics

#endif  // GENFRAC_NUMERICS_QUADRATURE_HPP_
