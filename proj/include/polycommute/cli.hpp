#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycommute {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitNotCommuting = 3,
  kExitViolations = 4,
  kExitUsage = 64,
};

/// Runs one command line; args[0] is the program name. Reports go to `out`,
/// errors to `err`, and "-Q -" reads Q from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace polycommute
