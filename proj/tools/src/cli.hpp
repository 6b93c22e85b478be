#pragma once

#include <iosfwd>

namespace rlie::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2, kBudgetError = 3 };

/// Runs the rlie command line; output goes to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rlie::cli
