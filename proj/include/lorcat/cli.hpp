#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lorcat {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitUsage = 2 };

/// Runs `lorcat <subcommand> [flags]`; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorcat
