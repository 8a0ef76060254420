#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace otcomp::cli {

// Exit statuses.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kVacuous = 2;
inline constexpr int kUsage = 3;

/// Runs one otcomp invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace otcomp::cli
