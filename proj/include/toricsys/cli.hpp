#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toricsys::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command; args excludes the program name. Output is deterministic.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricsys::cli
