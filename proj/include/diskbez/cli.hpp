#pragma once

#include <ostream>

namespace diskbez::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `diskbez` tool.
///
///   diskbez reduce --input PATH --degree M [--output PATH] [--continuity K,H]
///                  [--samples N] [--d-mode max|sum] [--svg PATH] [--report PATH]
///   diskbez elevate --input PATH --by S --output PATH
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diskbez::cli
