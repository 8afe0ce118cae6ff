#ifndef GENFRAC_NUMERICS_DIFFERENTIATE_HPP_
#define GENFRAC_NUMERICS_DIFFERENTIATE_HPP_

#include <functional>

namespace genfrac::numerics {

/// Central-difference scheme: base step `step`, refined by halving and
/// combined through `richardson_levels` rounds of Richardson extrapolation.
struct DifferenceScheme {
  double step = 0.0;
  int richardson_levels = 1;
};

struct Derivative {
  double value = 0.0;
  double abs_err = 0.0;  // gap between the last two Richardson columns
};

/// Derivative of order 1 or 2 at x. The step is h = c * scale with
/// c = cbrt(eps) and one Richardson level for order 1, c = eps^(1/8) and three
/// levels for order 2; `scale` defaults to max(1, |x|). The stencil reaches
/// at most h on either side of x.
///
/// Throws ErrorKind::step_underflow when x +- h is indistinguishable from x.
double differentiate(const std::function<double(double)>& g, double x, int order,
                     double scale = 0.0);

Derivative differentiate_detailed(const std::function<double(double)>& g, double x, int order,
                                  double scale = 0.0);

/// Same, with an explicit scheme. Larger steps with several Richardson levels
/// suit nested differentiation, where roundoff from inner levels would be
/// amplified by small outer steps.
Derivative differentiate(const std::function<double(double)>& g, double x, int order,
                         const DifferenceScheme& scheme);

}  // namespace genfrac::numerics

#endif  // GENFRAC_NUMERICS_DIFFERENTIATE_HPP_
