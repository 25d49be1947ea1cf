#pragma once

#include <iosfwd>

namespace sphtrop {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitNumeric = 2,
    kExitIo = 3,
};

/// Entry point of the `sphtrop` tool: amoeba, boundary, cone, tropicalize,
/// converge, selftest. Output without --out goes to `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sphtrop
