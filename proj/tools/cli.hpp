#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace neurideal::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInvalidInput = 2,
    kPairViolation = 3,
    kCheckFailed = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// exit code. All output goes to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace neurideal::cli
