#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gis::cli {

enum ExitCode : int {
  success = 0,
  parse_error = 1,
  validation_error = 2,
  verification_failure = 3,
};

// Runs one invocation. args[0] is the program name. Results go to out,
// diagnostics to err.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace gis::cli
