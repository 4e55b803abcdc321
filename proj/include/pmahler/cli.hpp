#pragma once

#include <ostream>

namespace pmahler {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitComputation = 3;
inline constexpr int kExitInput = 4;

/// Runs one CLI invocation, e.g. {"pmahler", "mahler", "--poly", "t^2-3*t+1"}.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pmahler
