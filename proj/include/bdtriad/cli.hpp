#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bdtriad {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitRefuted = 1,
  kExitInputError = 2,
};

/// Runs the command-line tool. `args` excludes the program name. Reports go
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bdtriad
