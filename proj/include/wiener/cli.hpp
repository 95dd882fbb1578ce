#pragma once

#include <ostream>
#include <span>
#include <string>

namespace wiener::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // verification failed, empty class
inline constexpr int kExitUsage = 2;     // bad arguments or input

/// Runs one command line (arguments without the program name) and returns
/// the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wiener::cli
