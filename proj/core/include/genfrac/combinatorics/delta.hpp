#ifndef GENFRAC_COMBINATORICS_DELTA_HPP_
#define GENFRAC_COMBINATORICS_DELTA_HPP_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "genfrac/operators/test_function.hpp"

namespace genfrac::combinatorics {

using BigInt = boost::multiprecision::cpp_int;

enum class Arithmetic { exact_integer, floating };

// Rows computed in floating point lose digits quickly once n grows.
inline constexpr int kFloatPrecisionRows = 25;

/// Coefficients of (x^k d/dx)^n = sum_j delta_j x^{n(k-1)+j} d^j/dx^j.
/// Entries are 1-based in j = 1..n as in the usual presentation; `exact`
/// is populated for integer k >= 0, `values` always.
struct TriangleRow {
  double k = 0.0;
  int n = 0;
  Arithmetic arithmetic = Arithmetic::floating;
  std::vector<BigInt> exact;
  std::vector<double> values;
  bool precision_loss = false;  // float path with n > kFloatPrecisionRows

  double at(int j) const { return values.at(static_cast<std::size_t>(j - 1)); }
  /// Exact decimal for integer rows, shortest round-trip float otherwise.
  std::string entry_string(int j) const;
};

TriangleRow delta_coefficients(double k, int n);

/// Rows 1..n_max.
std::vector<TriangleRow> delta_triangle(double k, int n_max);

/// Stirling numbers of the second kind by the alternating-sum formula.
/// Zero outside 0 <= j <= n.
BigInt stirling2(int n, int j);

/// Unsigned Lah numbers C(n-1, j-1) n!/j!. Zero outside 0 <= j <= n;
/// L(0, 0) = 1.
BigInt lah(int n, int j);

struct DeltaEvaluation {
  double expansion = 0.0;
  double nested = 0.0;
  double rel_gap = 0.0;
};

/// (x^k d/dx)^n f at x > 0 through the expansion, using f's own derivatives.
double apply_delta_operator(double k, int n, const operators::TestFunction& f, double x);

/// The same operator by n-fold nested finite differences; independent of
/// the coefficients. Supports n <= 4.
double apply_delta_operator_nested(double k, int n, const operators::TestFunction& f, double x);

/// Both paths and their relative gap.
DeltaEvaluation apply_delta_operator_checked(double k, int n, const operators::TestFunction& f,
                                             double x);

}  // namespace genfrac::combinatorics

#endif  // GENFRAC_COMBINATORICS_DELTA_HPP_
