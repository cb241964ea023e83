#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace goldbct::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2, kGuardrail = 3 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goldbct::cli
