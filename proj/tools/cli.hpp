#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pingpong::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `pingpong` tool. Never throws; returns 0, 1 or 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// argv adapter; argv[0] is skipped.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pingpong::cli
