#pragma once

#include <ostream>

namespace freebound::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kAssumption = 2, kNumerical = 3 };

/// Parses argv, runs one subcommand, maps exceptions to exit codes.
/// Data goes to `out`, diagnostics to `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace freebound::cli
