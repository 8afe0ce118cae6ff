#include "genfrac/numerics/quadrature.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace genfrac::numerics {
namespace {

struct JacobiEval {
  double p;       // P_n(x)
  double p_prev;  // P_{n-1}(x)
};

JacobiEval jacobi_recurrence(int n, double a, double b, double x) {
  double p_prev = 1.0;
  double p = 0.5 * (a - b + (a + b + 2.0) * x);
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double kk = k;
    const double s = 2.0 * kk + a + b;
    const double c1 = 2.0 * kk * (kk + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (kk + a - 1.0) * (kk + b - 1.0) * s;
    const double next = (c2 * p - c3 * p_prev) / c1;
    p_prev = p;
    p = next;
  }
  return {p, p_prev};
}

// d/dtheta P_n(cos theta), using
// (2n+a+b)(1-x^2) P_n' = n(a - b - (2n+a+b)x) P_n + 2(n+a)(n+b) P_{n-1}.
double jacobi_dtheta(int n, double a, double b, double theta, const JacobiEval& e) {
  const double x = std::cos(theta);
  const double s = 2.0 * n + a + b;
  const double numer = n * (a - b - s * x) * e.p + 2.0 * (n + a) * (n + b) * e.p_prev;
  return -numer / (s * std::sin(theta));
}

std::shared_ptr<const QuadratureRule> build_gauss_jacobi(int n, double a, double b) {
  auto rule = std::make_shared<QuadratureRule>();
  rule->kind = RuleKind::gauss_jacobi;
  rule->alpha_exp = a;
  rule->beta_exp = b;
  rule->order = n;

  const double log_c = (a + b + 1.0) * std::log(2.0) + std::lgamma(n + a + 1.0) +
                       std::lgamma(n + b + 1.0) - std::lgamma(n + a + b + 1.0) -
                       std::lgamma(n + 1.0);
  const double c = std::exp(log_c);

  std::vector<double> thetas(static_cast<std::size_t>(n));
  std::vector<double> weights(static_cast<std::size_t>(n));
  const double pi = std::numbers::pi;
  for (int i = 1; i <= n; ++i) {
    double theta = (i + 0.5 * a - 0.25) * pi / (n + 0.5 * (a + b + 1.0));
    theta = std::clamp(theta, 1e-3 / n, pi - 1e-3 / n);
    double deriv = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      const JacobiEval e = jacobi_recurrence(n, a, b, std::cos(theta));
      deriv = jacobi_dtheta(n, a, b, theta, e);
      const double step = e.p / deriv;
      theta -= step;
      if (!(theta > 0.0 && theta < pi) || !std::isfinite(theta)) break;
      // Near x = +-1 the recurrence only sees cos(theta), which resolves
      // theta to about eps / sin(theta).
      const double floor = 8.0 * std::numeric_limits<double>::epsilon() / std::sin(theta);
      if (std::abs(step) <= std::max(1e-13 * theta, floor)) {
        // One more step lands on the root to rounding; keep its derivative.
        const JacobiEval polish = jacobi_recurrence(n, a, b, std::cos(theta));
        deriv = jacobi_dtheta(n, a, b, theta, polish);
        theta -= polish.p / deriv;
        converged = theta > 0.0 && theta < pi;
        break;
      }
    }
    if (!converged) {
      std::ostringstream os;
      os << "Gauss-Jacobi node " << i << " of order " << n << " (alpha=" << a
         << ", beta=" << b << ") did not converge";
      fail(ErrorKind::convergence, os.str());
    }
    thetas[static_cast<std::size_t>(i - 1)] = theta;
    weights[static_cast<std::size_t>(i - 1)] = c / (deriv * deriv);
  }
  for (std::size_t i = 1; i < thetas.size(); ++i) {
    if (!(thetas[i] > thetas[i - 1])) {
      std::ostringstream os;
      os << "Gauss-Jacobi order " << n << " (alpha=" << a << ", beta=" << b
         << ") produced coincident nodes";
      fail(ErrorKind::convergence, os.str());
    }
  }
  // theta ascending means x descending; store ascending x.
  for (std::size_t j = thetas.size(); j-- > 0;) {
    const double theta = thetas[j];
    const double sh = std::sin(0.5 * theta);
    const double ch = std::cos(0.5 * theta);
    rule->nodes.push_back(std::cos(theta));
    rule->weights.push_back(weights[j]);
    rule->one_minus.push_back(2.0 * sh * sh);
    rule->one_plus.push_back(2.0 * ch * ch);
  }
  return rule;
}

}  // namespace

void QuadratureConfig::validate() const {
  const double floor = 100.0 * std::numeric_limits<double>::epsilon();
  if (!(target_rel_tol >= floor)) {
    std::ostringstream os;
    os << "target_rel_tol " << target_rel_tol << " is below 100 * machine epsilon";
    fail(ErrorKind::domain, os.str());
  }
  if (max_order < 1) fail(ErrorKind::domain, "max_order must be positive");
  if (max_level < 1) fail(ErrorKind::domain, "max_level must be positive");
}

std::shared_ptr<const QuadratureRule> gauss_jacobi_rule(int order, double alpha_exp,
                                                        double beta_exp) {
  if (order < 1) fail(ErrorKind::domain, "Gauss-Jacobi order must be >= 1");
  if (!(alpha_exp > -1.0) || !(beta_exp > -1.0)) {
    fail(ErrorKind::domain, "Gauss-Jacobi exponents must exceed -1");
  }
  using Key = std::tuple<int, double, double>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;
  const Key key{order, alpha_exp, beta_exp};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = build_gauss_jacobi(order, alpha_exp, beta_exp);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(rule)).first->second;
}

QuadratureRule tanh_sinh_rule(int level) {
  if (level < 0) fail(ErrorKind::domain, "tanh-sinh level must be >= 0");
  QuadratureRule rule;
  rule.kind = RuleKind::double_exponential;
  const double h = std::ldexp(1.0, -level);
  const long kmax = static_cast<long>(std::floor(6.0 / h));
  for (long k = -kmax; k <= kmax; ++k) {
    const double t = static_cast<double>(k) * h;
    const double u = detail::kHalfPi * std::sinh(std::abs(t));
    const double complement = 2.0 / (std::exp(2.0 * u) + 1.0);
    const double cu = std::cosh(u);
    const double w = h * detail::kHalfPi * std::cosh(t) / (cu * cu);
    if (complement == 0.0 || w == 0.0 || !std::isfinite(w)) continue;
    const double x = t < 0.0 ? -(1.0 - complement) : (1.0 - complement);
    rule.nodes.push_back(t == 0.0 ? 0.0 : x);
    rule.weights.push_back(w);
    rule.one_minus.push_back(t < 0.0 ? 2.0 - complement : complement);
    rule.one_plus.push_back(t < 0.0 ? complement : 2.0 - complement);
  }
  rule.order = static_cast<int>(rule.nodes.size());
  return rule;
}

QuadResult<double> integrate_improper_detailed(const std::function<double(double)>& f,
                                               double lower, const QuadratureConfig& cfg,
                                               int fixed_level) {
  if (!(lower >= 0.0) || !std::isfinite(lower)) {
    fail(ErrorKind::domain, "integrate_improper requires a finite lower limit >= 0");
  }
  return exp_sinh<double>(f, lower, cfg, fixed_level);
}

double integrate_improper(const std::function<double(double)>& f, double lower,
                          const QuadratureConfig& cfg) {
  return integrate_improper_detailed(f, lower, cfg).value;
}

QuadResult<double> integrate_finite(const std::function<double(double)>& f, double lo,
                                    double hi, const QuadratureConfig& cfg, int fixed_level) {
  return tanh_sinh<double>(f, lo, hi, cfg, fixed_level);
}

QuadResult<double> integrate_endpoint_weighted(const std::function<double(double)>& g,
                                               double width, double exponent,
                                               const QuadratureConfig& cfg, int fixed_order) {
  cfg.validate();
  if (!(width >= 0.0) || !std::isfinite(width)) {
    fail(ErrorKind::domain, "endpoint-weighted integral needs a finite width >= 0");
  }
  QuadResult<double> out;
  if (width == 0.0) return out;
  const double scale = std::pow(0.5 * width, exponent + 1.0);

  auto apply = [&](int order) {
    const auto rule = gauss_jacobi_rule(order, exponent, 0.0);
    double sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
      const double w = 0.5 * width * rule->one_minus[i];
      const double gv = g(w);
      ++out.evaluations;
      if (!std::isfinite(gv)) detail::nonfinite_at(w);
      sum += rule->weights[i] * gv;
      abs_sum += std::abs(rule->weights[i] * gv);
    }
    return std::pair{scale * sum, scale * abs_sum};
  };

  if (fixed_order > 0) {
    out.value = apply(fixed_order).first;
    out.resolution = fixed_order;
    return out;
  }
  auto [previous, prev_abs] = apply(8);
  (void)prev_abs;
  for (int order = 16; order <= cfg.max_order; order *= 2) {
    const auto [value, abs_sum] = apply(order);
    out.value = value;
    out.resolution = order;
    out.abs_err = std::abs(value - previous);
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * abs_sum;
    if (out.abs_err <= cfg.target_rel_tol * std::abs(value) || out.abs_err <= floor ||
        out.abs_err <= detail::kAbsoluteFloor) {
      return out;
    }
    previous = value;
  }
  std::ostringstream os;
  os << "Gauss-Jacobi (exponent " << exponent << ") did not reach relative tolerance "
     << cfg.target_rel_tol << " by order " << cfg.max_order;
  fail(ErrorKind::convergence, os.str());
}

}  // namespace genfrac::numerics
