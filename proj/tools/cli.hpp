#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace banet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailed = 1;
inline constexpr int kExitInputError = 2;

// Runs the command line `args` (without the program name), writing to the
// given streams. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace banet::cli
