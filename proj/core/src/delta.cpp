#include "genfrac/combinatorics/delta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "genfrac/error.hpp"
#include "genfrac/format.hpp"
#include "genfrac/numerics/differentiate.hpp"

namespace genfrac::combinatorics {
namespace {

bool is_nonnegative_integer(double k) {
  return k >= 0.0 && k <= 1e6 && std::floor(k) == k;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int j) {
  if (j < 0 || j > n) return 0;
  j = std::min(j, n - j);
  BigInt r = 1;
  for (int i = 1; i <= j; ++i) {
    r *= n - j + i;
    r /= i;
  }
  return r;
}

// One application of x^k d/dx to sum_j c_j x^{m(k-1)+j} D^j:
//   c'_j = c_{j-1} + (m(k-1)+j) c_j.
template <class T, class Coef>
std::vector<T> next_row(const std::vector<T>& row, int m, Coef coef) {
  std::vector<T> out(row.size() + 1, T(0));
  for (std::size_t j = 1; j <= out.size(); ++j) {
    T v = j >= 2 ? row[j - 2] : T(0);
    if (j <= row.size()) v += coef(m, static_cast<int>(j)) * row[j - 1];
    out[j - 1] = v;
  }
  return out;
}

}  // namespace

std::string TriangleRow::entry_string(int j) const {
  if (arithmetic == Arithmetic::exact_integer) {
    return exact.at(static_cast<std::size_t>(j - 1)).str();
  }
  return format_shortest(at(j));
}

TriangleRow delta_coefficients(double k, int n) {
  if (n < 1) fail(ErrorKind::domain, "triangle row index n must be >= 1");
  if (!std::isfinite(k)) fail(ErrorKind::domain, "k must be finite");
  TriangleRow row;
  row.k = k;
  row.n = n;
  if (is_nonnegative_integer(k)) {
    row.arithmetic = Arithmetic::exact_integer;
    const long ki = static_cast<long>(k);
    std::vector<BigInt> r{1};
    for (int m = 1; m < n; ++m) {
      r = next_row(r, m, [ki](int mm, int j) { return BigInt(mm * (ki - 1) + j); });
    }
    row.exact = r;
    row.values.reserve(r.size());
    for (const auto& v : r) row.values.push_back(v.convert_to<double>());
  } else {
    row.arithmetic = Arithmetic::floating;
    std::vector<double> r{1.0};
    for (int m = 1; m < n; ++m) {
      r = next_row(r, m, [k](int mm, int j) { return mm * (k - 1.0) + j; });
    }
    row.values = r;
    row.precision_loss = n > kFloatPrecisionRows;
  }
  return row;
}

std::vector<TriangleRow> delta_triangle(double k, int n_max) {
  if (n_max < 1) fail(ErrorKind::domain, "triangle needs at least one row");
  std::vector<TriangleRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) rows.push_back(delta_coefficients(k, n));
  return rows;
}

BigInt stirling2(int n, int j) {
  if (n < 0 || j < 0 || j > n) return 0;
  BigInt sum = 0;
  for (int i = 0; i <= j; ++i) {
    BigInt term = binomial(j, i) * boost::multiprecision::pow(BigInt(j - i), static_cast<unsigned>(n));
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / factorial(j);
}

BigInt lah(int n, int j) {
  if (n < 0 || j < 0 || j > n) return 0;
  if (n == 0) return 1;  // j == 0
  if (j == 0) return 0;
  return binomial(n - 1, j - 1) * factorial(n) / factorial(j);
}

double apply_delta_operator(double k, int n, const operators::TestFunction& f, double x) {
  if (!(x > 0.0)) fail(ErrorKind::domain, "delta operator needs x > 0");
  const TriangleRow row = delta_coefficients(k, n);
  double sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double power = std::pow(x, n * (k - 1.0) + j);
    sum += row.at(j) * power * f.derivative(x, j);
  }
  return sum;
}

double apply_delta_operator_nested(double k, int n, const operators::TestFunction& f, double x) {
  if (!(x > 0.0)) fail(ErrorKind::domain, "delta operator needs x > 0");
  if (n < 1 || n > 4) fail(ErrorKind::domain, "nested delta operator supports 1 <= n <= 4");
  // Wide steps with several Richardson levels: each level's roundoff is
  // amplified by 1/h at the next.
  std::function<double(double, int)> level = [&](double t, int depth) -> double {
    if (depth == 0) return f(t);
    const auto inner = [&](double s) { return level(s, depth - 1); };
    const double step = 0.1 * t;
    const double d = numerics::differentiate(inner, t, 1, numerics::DifferenceScheme{step, 4}).value;
    return std::pow(t, k) * d;
  };
  return level(x, n);
}

DeltaEvaluation apply_delta_operator_checked(double k, int n, const operators::TestFunction& f,
                                             double x) {
  DeltaEvaluation ev;
  ev.expansion = apply_delta_operator(k, n, f, x);
  ev.nested = apply_delta_operator_nested(k, n, f, x);
  const double mag = std::max(std::abs(ev.expansion), 1e-300);
  ev.rel_gap = std::abs(ev.expansion - ev.nested) / mag;
  return ev;
}

}  // namespace genfrac::combinatorics
