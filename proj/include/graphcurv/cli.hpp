#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphcurv::cli {

enum ExitCode : int {
  ok = 0,
  input_error = 1,
  domain_error = 2,
  capacity_error = 3,
  consistency_error = 4,
};

/// Runs one command line (arguments after the program name). Results go to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphcurv::cli
