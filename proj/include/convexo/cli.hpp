#pragma once

#include <iostream>

namespace convexo::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
    kSuccess = 0,
    kUsage = 1,
    kViolation = 2,
    kInconclusive = 3,
};

/// Runs one invocation. Exactly one JSON document goes to `out` (none for
/// usage errors and --help); diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

} // namespace convexo::cli
