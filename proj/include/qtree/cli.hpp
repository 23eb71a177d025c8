#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtree {

enum ExitCode : int {
    kExitOk = 0,
    kExitDisagreement = 1,
    kExitInputError = 2,
    kExitIneligible = 3,
    kExitResourceGuard = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtree
