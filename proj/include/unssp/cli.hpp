#pragma once

#include <iosfwd>

namespace unssp {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInput = 2, kExitSizeGate = 3 };

/// Entry point of the `unssp` tool. Results go to `out` (or the file named by
/// --output), errors to `err` as one JSON object per line.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unssp
