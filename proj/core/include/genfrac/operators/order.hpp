#ifndef GENFRAC_OPERATORS_ORDER_HPP_
#define GENFRAC_OPERATORS_ORDER_HPP_

#include <limits>
#include <string_view>

namespace genfrac::operators {

/// Operator order alpha > 0 and generalization parameter rho > 0, with the
/// derived integer n = ceil(alpha).
class Order {
 public:
  Order(double alpha, double rho);

  double alpha() const { return alpha_; }
  double rho() const { return rho_; }
  int n() const { return n_; }

 private:
  double alpha_;
  double rho_;
  int n_;
};

enum class Side { left, right };

/// Integration range: [a, x] for left-sided operators, [x, b] for
/// right-sided ones. b = inf (Liouville type) is allowed on the right only.
struct Interval {
  double a = 0.0;
  double b = std::numeric_limits<double>::infinity();
  Side side = Side::left;

  static Interval left(double a = 0.0) { return {a, std::numeric_limits<double>::infinity(), Side::left}; }
  static Interval right(double b = std::numeric_limits<double>::infinity()) {
    return {0.0, b, Side::right};
  }

  void validate() const;
};

enum class Path { quadrature, closed_form, mellin };

std::string_view to_string(Path path);

struct OperatorResult {
  double value = 0.0;
  double est_rel_err = 0.0;
  Path path = Path::quadrature;
};

}  // namespace genfrac::operators

#endif  // GENFRAC_OPERATORS_ORDER_HPP_
