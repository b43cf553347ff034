#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hetperc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitNumerical = 3,
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and one-line diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hetperc::cli
