#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hooklen::cli {

/// Exit codes: 0 success (all checks passed), 1 a requested check failed,
/// 2 usage or input error.
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hooklen::cli
