#ifndef GENFRAC_OPERATORS_FRACTIONAL_HPP_
#define GENFRAC_OPERATORS_FRACTIONAL_HPP_

#include <functional>

#include "genfrac/numerics/quadrature.hpp"
#include "genfrac/operators/order.hpp"
#include "genfrac/operators/test_function.hpp"

namespace genfrac::operators {

using numerics::QuadratureConfig;

// Generalized fractional integrals
//
//   left:  rho^{1-alpha}/Gamma(alpha) int_a^x tau^{rho-1} f(tau) (x^rho - tau^rho)^{alpha-1} dtau
//   right: rho^{1-alpha}/Gamma(alpha) int_x^b tau^{rho-1} f(tau) (tau^rho - x^rho)^{alpha-1} dtau
//
// The part of the range next to x is mapped to a Gauss-Jacobi rule carrying
// the kernel singularity; the remainder goes to tanh-sinh (or exp-sinh for
// b = inf) in tau.

OperatorResult gfi_left(const TestFunction& f, const Order& ord, const Interval& iv, double x,
                        const QuadratureConfig& cfg = {});
OperatorResult gfi_right(const TestFunction& f, const Order& ord, const Interval& iv, double x,
                         const QuadratureConfig& cfg = {});

// Generalized fractional derivatives: (+-x^{1-rho} d/dx)^n applied to the
// integral of order n - alpha (the identity when alpha = n). The inner
// integral is differentiated by central differences at a quadrature
// resolution frozen at x, so that it is a smooth function of the abscissa.
// Orders up to n = 2 are supported.

OperatorResult gfd_left(const TestFunction& f, const Order& ord, const Interval& iv, double x,
                        const QuadratureConfig& cfg = {});
OperatorResult gfd_right(const TestFunction& f, const Order& ord, const Interval& iv, double x,
                         const QuadratureConfig& cfg = {});

struct PowerLaw {
  double coefficient = 0.0;
  double exponent = 0.0;
};

/// D^alpha_{0+} x^nu = coefficient * x^exponent with
/// coefficient = rho^alpha Gamma(1 + nu/rho) / Gamma(1 + nu/rho - alpha) and
/// exponent = nu - alpha rho.
PowerLaw power_closed_form(double nu, const Order& ord);

/// t -> gfi(f)(t) as a plain callable (zero for t <= a on the left side),
/// convenient for composing operators.
std::function<double(double)> integral_function(const TestFunction& f, const Order& ord,
                                                const Interval& iv,
                                                const QuadratureConfig& cfg = {});

}  // namespace genfrac::operators

#endif  // GENFRAC_OPERATORS_FRACTIONAL_HPP_
