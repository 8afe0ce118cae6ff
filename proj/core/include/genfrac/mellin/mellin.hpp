#ifndef GENFRAC_MELLIN_MELLIN_HPP_
#define GENFRAC_MELLIN_MELLIN_HPP_

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genfrac/numerics/gamma.hpp"
#include "genfrac/numerics/quadrature.hpp"
#include "genfrac/operators/order.hpp"
#include "genfrac/operators/test_function.hpp"

namespace genfrac::mellin {

using numerics::Complex;
using numerics::QuadratureConfig;
using operators::Order;
using operators::Side;
using operators::TestFunction;

/// Mellin variable s with the strip it is meant to lie in.
struct StripPoint {
  Complex s;
  double strip_lo = -std::numeric_limits<double>::infinity();
  double strip_hi = std::numeric_limits<double>::infinity();

  bool admissible() const { return strip_lo < s.real() && s.real() < strip_hi; }

  /// s together with f's fundamental strip.
  static StripPoint for_function(const TestFunction& f, Complex s);
};

enum class IdentityStatus {
  evaluated,
  strip_violation,        // a side condition on Re(s) fails; nothing computed
  boundary_nonvanishing,  // sampled boundary terms too large; identity inapplicable
  inapplicable,           // the property does not apply to this function
};

std::string_view to_string(IdentityStatus status);

struct IdentityReport {
  std::string label;
  Complex lhs;
  Complex rhs;
  double rel_residual = std::numeric_limits<double>::infinity();
  bool strip_condition_met = false;
  IdentityStatus status = IdentityStatus::strip_violation;
  std::string note;

  bool evaluated() const { return status == IdentityStatus::evaluated; }
};

/// Relative residual |lhs - rhs| / max(|rhs|, tiny).
double relative_residual(Complex lhs, Complex rhs);

/// M[f](s) = int_0^inf x^{s-1} f(x) dx by double-exponential quadrature
/// (exp-sinh over (0, inf), tanh-sinh over (0, c) when f vanishes beyond c).
/// Throws ErrorKind::domain when Re(s) is outside f's strip or sp's strip.
Complex mellin_numeric(const TestFunction& f, const StripPoint& sp,
                       const QuadratureConfig& cfg = {});

/// Same kernel for an arbitrary callable; no strip check.
Complex mellin_callable(const std::function<double(double)>& g, Complex s,
                        std::optional<double> support_end, const QuadratureConfig& cfg = {});

// Gamma factors relating the transform of an operator to that of f.
Complex mt1_factor(Complex s, double alpha, double rho);   // Gamma(1-s/rho-a)/(Gamma(1-s/rho) rho^a)
Complex mt2_factor(Complex s, double alpha, double rho);   // Gamma(s/rho)/(Gamma(s/rho+a) rho^a)
Complex mtd1_factor(Complex s, double alpha, double rho);  // rho^a Gamma(1-s/rho+a)/Gamma(1-s/rho)
Complex mtd2_factor(Complex s, double alpha, double rho);  // rho^a Gamma(s/rho)/Gamma(s/rho-a)

/// Leading-order MT1 factor for real s < 0 as rho -> 0+: the asymptotic
/// gamma ratio at z = -s/rho, equal to (-s)^{-alpha}.
double mt1_factor_small_rho(double s, double alpha, double rho);

struct IntegralIdentityOptions {
  /// Lower limit of the left operator. a > 0 replaces f by f restricted to
  /// [a, inf); such residuals are informational.
  double lower = 0.0;
};

/// MT1 (left, a = 0) or MT2 (right, b = inf): M[I^alpha f](s) against
/// factor(s) * M[f](s + alpha rho).
IdentityReport check_integral_identity(const TestFunction& f, const Order& ord,
                                       const StripPoint& sp, Side side,
                                       const QuadratureConfig& cfg = {},
                                       const IntegralIdentityOptions& opts = {});

/// MTD1 (left) or MTD2 (right) for 0 < alpha < 1: M[D^alpha f](s) against
/// factor(s) * M[f](s - alpha rho). Boundary terms x^{s-rho} I^{1-alpha}f
/// are sampled at 1e-4 and 1e4.
IdentityReport check_derivative_identity(const TestFunction& f, const Order& ord,
                                         const StripPoint& sp, Side side,
                                         const QuadratureConfig& cfg = {});

struct PropertyOptions {
  double nu = 1.0;     // shift for property 2
  double power = 2.0;  // argument power for property 3
};

/// Table properties 2 (x^nu f), 3 (f(x^p)), 5 (x f') and 6 (int_0^x f).
std::vector<IdentityReport> check_transform_properties(const TestFunction& f,
                                                       const StripPoint& sp,
                                                       const QuadratureConfig& cfg = {},
                                                       const PropertyOptions& opts = {});

/// M[phi'](s) = -(s-1) M[phi](s-1) with phi' by finite differences and the
/// boundary bracket x^{s-1} phi(x) sampled at 1e-4 and 1e4. Only m = 1.
IdentityReport mth_derivative_transform_check(const TestFunction& phi, int m,
                                              const StripPoint& sp,
                                              const QuadratureConfig& cfg = {});

}  // namespace genfrac::mellin

#endif  // GENFRAC_MELLIN_MELLIN_HPP_
