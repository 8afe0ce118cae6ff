#ifndef GENFRAC_TOOLS_CLI_COMMANDS_HPP_
#define GENFRAC_TOOLS_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "genfrac/operators/test_function.hpp"

namespace genfrac::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // residual above tolerance, or a numerical failure
  kUsage = 2,        // bad flags, domain/pole/divergence errors
  kIo = 3,
};

/// power:NU | truncpower:NU,CUTOFF | exppower:MU,D
operators::TestFunction parse_test_function(const std::string& text);

/// Runs one command line (without the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genfrac::cli

#endif  // GENFRAC_TOOLS_CLI_COMMANDS_HPP_
