#pragma once

#include <ostream>

namespace edsm::cli {

/// Exit codes.
inline constexpr int kMatch = 0;
inline constexpr int kNoMatch = 1;
inline constexpr int kError = 2;
inline constexpr int kDisagree = 3;

/// Entry point of the edsm tool; writes to out/err instead of the process
/// streams so tests can drive it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edsm::cli
