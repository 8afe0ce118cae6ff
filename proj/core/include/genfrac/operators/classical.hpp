#ifndef GENFRAC_OPERATORS_CLASSICAL_HPP_
#define GENFRAC_OPERATORS_CLASSICAL_HPP_

#include <string_view>

#include "genfrac/numerics/quadrature.hpp"
#include "genfrac/operators/order.hpp"
#include "genfrac/operators/test_function.hpp"

namespace genfrac::operators {

enum class Classical {
  rl_integral,          // 1/Gamma(a) int_a^x (x - t)^{a-1} f(t) dt
  hadamard_integral,    // 1/Gamma(a) int_a^x log(x/t)^{a-1} f(t) dt/t
  rl_derivative,        // (d/dx)^n of the RL integral of order n - a
  hadamard_derivative,  // (x d/dx)^n of the Hadamard integral of order n - a
};

std::string_view to_string(Classical which);

/// Classical left-sided Riemann-Liouville and Hadamard operators, each
/// evaluated from its own definition with its own quadrature split; used as
/// targets for the rho -> 1 and rho -> 0+ limits of the generalized family.
/// Hadamard variants need a > 0. Derivatives support alpha <= 2.
OperatorResult limit_emulation(const TestFunction& f, double alpha, Classical which, double a,
                               double x, const numerics::QuadratureConfig& cfg = {});

}  // namespace genfrac::operators

#endif  // GENFRAC_OPERATORS_CLASSICAL_HPP_
