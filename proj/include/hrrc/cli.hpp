#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hrrc::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // NoneExists, not strongly stable, unsatisfied
  kUsage = 2,     // bad flags or unreadable / invalid input
  kUnknown = 3,   // no polynomial solver applies and the instance is too big to brute-force
};

/// Runs the command line `args` (args[0] is the program name). Documents go
/// to `out`, diagnostics to `err`. Reads HRRC_BRUTE_LIMIT from the
/// environment when no --brute-limit / --limit flag is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrrc::cli
