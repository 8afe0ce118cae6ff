#include "genfrac/error.hpp"

namespace genfrac {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain error";
    case ErrorKind::pole: return "pole error";
    case ErrorKind::overflow: return "overflow error";
    case ErrorKind::convergence: return "convergence failure";
    case ErrorKind::divergence: return "divergent integral";
    case ErrorKind::nonfinite: return "non-finite integrand";
    case ErrorKind::step_underflow: return "step underflow";
  }
  return "error";
}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace genfrac
