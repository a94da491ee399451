#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace svir::cli {

enum ExitCode : int { kSuccess = 0, kMathFailure = 1, kUsageError = 2 };

/// Runs one invocation. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svir::cli
