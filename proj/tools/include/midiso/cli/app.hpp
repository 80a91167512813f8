#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace midiso::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailureFound = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
};

/// Runs the `midiso` command line. `args` excludes the program name. Results
/// go to `out` (or the --out file), diagnostics and progress to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace midiso::cli
