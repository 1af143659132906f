#pragma once

#include <ostream>

namespace rankagg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< failed check or numerical failure
inline constexpr int kExitUsage = 2;    ///< usage or input error

/// Entry point of the `rankagg` command; writes to `out`/`err` instead of the
/// process streams so it can be driven from tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rankagg
