#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace profilium {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitSuiteFailure = 1, kExitUsage = 2 };

/// Runs one invocation (args exclude the program name). Output is written to `out` in one piece.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace profilium
