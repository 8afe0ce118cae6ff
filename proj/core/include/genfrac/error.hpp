#ifndef GENFRAC_ERROR_HPP_
#define GENFRAC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace genfrac {

enum class ErrorKind {
  domain,          // a precondition on the arguments is violated
  pole,            // gamma function evaluated at a non-positive integer
  overflow,        // result exceeds the double range
  convergence,     // iteration or refinement did not reach its tolerance
  divergence,      // the defining integral does not exist
  nonfinite,       // an integrand produced NaN or Inf
  step_underflow,  // finite-difference step collapsed
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers (the CLI in
/// particular) how to classify the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace genfrac

#endif  // GENFRAC_ERROR_HPP_
