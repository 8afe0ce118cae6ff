#include "genfrac/operators/order.hpp"

#include <cmath>

#include "genfrac/error.hpp"

namespace genfrac::operators {

Order::Order(double alpha, double rho) : alpha_(alpha), rho_(rho), n_(0) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) fail(ErrorKind::domain, "order alpha must be > 0");
  if (!(rho > 0.0) || !std::isfinite(rho)) fail(ErrorKind::domain, "parameter rho must be > 0");
  if (alpha > 1e6) fail(ErrorKind::domain, "order alpha is too large");
  n_ = static_cast<int>(std::ceil(alpha));
}

void Interval::validate() const {
  if (!(a >= 0.0) || !std::isfinite(a)) fail(ErrorKind::domain, "interval needs finite a >= 0");
  if (!(b > a)) fail(ErrorKind::domain, "interval needs b > a");
}

std::string_view to_string(Path path) {
  switch (path) {
    case Path::quadrature: return "quadrature";
    case Path::closed_form: return "closed-form";
    case Path::mellin: return "mellin";
  }
  return "unknown";
}

}  // namespace genfrac::operators
