#include "genfrac/numerics/differentiate.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "genfrac/error.hpp"

namespace genfrac::numerics {
namespace {

double central(const std::function<double(double)>& g, double x, double h, int order,
               double gx) {
  const double up = g(x + h);
  const double down = g(x - h);
  if (order == 1) return (up - down) / (2.0 * h);
  return (up - 2.0 * gx + down) / (h * h);
}

}  // namespace

Derivative differentiate(const std::function<double(double)>& g, double x, int order,
                         const DifferenceScheme& scheme) {
  if (order != 1 && order != 2) {
    fail(ErrorKind::domain, "differentiate supports order 1 or 2");
  }
  if (scheme.richardson_levels < 0) fail(ErrorKind::domain, "negative Richardson level count");
  // Snap h so that x + h is exactly representable relative to x.
  const double h0 = (x + scheme.step) - x;
  if (!(h0 > 0.0) || !std::isfinite(h0) || x - h0 == x ||
      h0 < 1e3 * std::numeric_limits<double>::min()) {
    std::ostringstream os;
    os.precision(17);
    os << "step " << scheme.step << " collapses at x = " << x;
    fail(ErrorKind::step_underflow, os.str());
  }
  const double gx = order == 2 ? g(x) : 0.0;
  const int levels = scheme.richardson_levels;
  std::vector<double> prev(static_cast<std::size_t>(levels) + 1);
  std::vector<double> cur(static_cast<std::size_t>(levels) + 1);
  double h = h0;
  Derivative out;
  for (int i = 0; i <= levels; ++i) {
    cur[0] = central(g, x, h, order, gx);
    double factor = 4.0;
    for (int j = 1; j <= i; ++j) {
      cur[static_cast<std::size_t>(j)] =
          cur[static_cast<std::size_t>(j - 1)] +
          (cur[static_cast<std::size_t>(j - 1)] - prev[static_cast<std::size_t>(j - 1)]) /
              (factor - 1.0);
      factor *= 4.0;
    }
    if (i > 0) {
      out.abs_err = std::abs(cur[static_cast<std::size_t>(i)] -
                             prev[static_cast<std::size_t>(i - 1)]);
    }
    out.value = cur[static_cast<std::size_t>(i)];
    std::swap(prev, cur);
    h *= 0.5;
  }
  if (!std::isfinite(out.value)) {
    std::ostringstream os;
    os.precision(17);
    os << "non-finite difference quotient at x = " << x;
    fail(ErrorKind::nonfinite, os.str());
  }
  return out;
}

Derivative differentiate_detailed(const std::function<double(double)>& g, double x, int order,
                                  double scale) {
  if (scale == 0.0) scale = std::max(1.0, std::abs(x));
  if (!(scale > 0.0)) fail(ErrorKind::domain, "differentiate scale must be positive");
  const double eps = std::numeric_limits<double>::epsilon();
  if (order == 2) return differentiate(g, x, order, DifferenceScheme{std::pow(eps, 0.125) * scale, 3});
  return differentiate(g, x, order, DifferenceScheme{std::cbrt(eps) * scale, 1});
}

double differentiate(const std::function<double(double)>& g, double x, int order,
                     double scale) {
  return differentiate_detailed(g, x, order, scale).value;
}

}  // namespace genfrac::numerics
