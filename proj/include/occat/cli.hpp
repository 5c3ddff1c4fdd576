#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace occat {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

/// Runs the CLI on `args` (args[0] is the program name) and returns the exit
/// code. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace occat
