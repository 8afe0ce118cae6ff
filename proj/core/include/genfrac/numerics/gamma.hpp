#ifndef GENFRAC_NUMERICS_GAMMA_HPP_
#define GENFRAC_NUMERICS_GAMMA_HPP_

#include <complex>

namespace genfrac::numerics {

using Complex = std::complex<double>;

/**
 * Gamma function by the Lanczos approximation (g = 7, nine coefficients),
 * with the reflection formula for Re(z) < 1/2.
 *
 * Throws ErrorKind::pole at z = 0, -1, -2, ... and ErrorKind::overflow when
 * |Gamma(z)| leaves the double range.
 */
Complex gamma(Complex z);
double gamma(double x);

/// log Gamma(z) on a branch that makes exp(log_gamma(z)) == Gamma(z). Does
/// not overflow for large arguments; used for gamma ratios.
Complex log_gamma(Complex z);

/// Gamma(num) / Gamma(den). Direct for moderate arguments, through
/// log_gamma otherwise. Returns 0 when `den` sits on a pole.
Complex gamma_ratio(Complex num, Complex den);
double gamma_ratio(double num, double den);

/// Leading term z^(a-b) of Gamma(z+a)/Gamma(z+b) as |z| -> infinity.
double gamma_ratio_asymptotic(double z, double a, double b);

bool is_gamma_pole(Complex z);

}  // namespace genfrac::numerics

#endif  // GENFRAC_NUMERICS_GAMMA_HPP_
