#pragma once

#include <ostream>

namespace grassmann::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCounterexample = 1;
inline constexpr int kUsageError = 2;

// Runs the command line `argv[0] <command> [flags]`, writing reports to out
// and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grassmann::cli
