#pragma once

#include <ostream>

namespace almg {

/// Exit codes: 0 pass, 1 check failure, 2 input or usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// The `almg` command line, writing to the given streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace almg
