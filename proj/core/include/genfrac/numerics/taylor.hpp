#ifndef GENFRAC_NUMERICS_TAYLOR_HPP_
#define GENFRAC_NUMERICS_TAYLOR_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

namespace genfrac::numerics {

/// Truncated Taylor series c_0 + c_1 h + ... + c_d h^d about a point, with
/// c_k = f^(k)(x) / k!. Arithmetic propagates derivatives exactly up to the
/// truncation degree (forward-mode Taylor arithmetic).
class TaylorSeries {
 public:
  explicit TaylorSeries(std::size_t degree, double value = 0.0) : c_(degree + 1, 0.0) {
    c_[0] = value;
  }

  /// The identity function expanded at x: x + h.
  static TaylorSeries variable(std::size_t degree, double x) {
    TaylorSeries s(degree, x);
    if (degree >= 1) s.c_[1] = 1.0;
    return s;
  }

  std::size_t degree() const { return c_.size() - 1; }
  double operator[](std::size_t k) const { return c_[k]; }

  /// k-th derivative at the expansion point.
  double derivative(std::size_t k) const {
    double fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
    return c_[k] * fact;
  }

  TaylorSeries& operator+=(const TaylorSeries& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  TaylorSeries& operator-=(const TaylorSeries& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  TaylorSeries& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }

  friend TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b) { return a += b; }
  friend TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b) { return a -= b; }
  friend TaylorSeries operator*(TaylorSeries a, double s) { return a *= s; }
  friend TaylorSeries operator*(double s, TaylorSeries a) { return a *= s; }

  friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
    TaylorSeries r(a.degree());
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
      double sum = 0.0;
      for (std::size_t j = 0; j <= k; ++j) sum += a.c_[j] * b.c_[k - j];
      r.c_[k] = sum;
    }
    return r;
  }

  friend TaylorSeries exp(const TaylorSeries& a) {
    TaylorSeries r(a.degree(), std::exp(a.c_[0]));
    for (std::size_t k = 1; k < r.c_.size(); ++k) {
      double sum = 0.0;
      for (std::size_t j = 1; j <= k; ++j) {
        sum += static_cast<double>(j) * a.c_[j] * r.c_[k - j];
      }
      r.c_[k] = sum / static_cast<double>(k);
    }
    return r;
  }

  /// Requires a[0] > 0.
  friend TaylorSeries log(const TaylorSeries& a) {
    TaylorSeries r(a.degree(), std::log(a.c_[0]));
    for (std::size_t k = 1; k < r.c_.size(); ++k) {
      double sum = 0.0;
      for (std::size_t j = 1; j < k; ++j) {
        sum += static_cast<double>(j) * r.c_[j] * a.c_[k - j];
      }
      r.c_[k] = (a.c_[k] - sum / static_cast<double>(k)) / a.c_[0];
    }
    return r;
  }

  /// a^p for constant p; requires a[0] > 0.
  friend TaylorSeries pow(const TaylorSeries& a, double p) {
    TaylorSeries r(a.degree(), std::pow(a.c_[0], p));
    for (std::size_t k = 1; k < r.c_.size(); ++k) {
      double sum = 0.0;
      for (std::size_t j = 1; j <= k; ++j) {
        sum += (p * static_cast<double>(j) - static_cast<double>(k - j)) * a.c_[j] *
               r.c_[k - j];
      }
      r.c_[k] = sum / (static_cast<double>(k) * a.c_[0]);
    }
    return r;
  }

 private:
  std::vector<double> c_;
};

}  // namespace genfrac::numerics

#endif  // GENFRAC_NUMERICS_TAYLOR_HPP_
