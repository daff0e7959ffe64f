#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tcomb::cli {

/// Exit codes: 0 sat/success, 1 unsat/negative, 2 usage or validation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcomb::cli
