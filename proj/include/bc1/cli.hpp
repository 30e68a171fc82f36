// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace bc1 {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the bc1 command line. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bc1
