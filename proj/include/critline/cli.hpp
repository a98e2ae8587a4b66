#pragma once

#include <iosfwd>

namespace critline::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCompute = 3;
inline constexpr int kExitVerification = 4;

/// Entry point of the `critline` executable. Writes results to `out` and
/// diagnostics to `err`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace critline::cli
