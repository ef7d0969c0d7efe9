#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bruhat::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBudget = 2,
  kFitFailure = 3,
  kMismatch = 4,
};

// Environment variable naming the coefficient cache directory; --cache-dir overrides it.
inline constexpr const char* kCacheEnv = "BRUHAT_CACHE_DIR";

// Runs the tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bruhat::cli
