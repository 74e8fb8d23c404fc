#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coha::cli {

// Exit codes of run().
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

// Parses args (without the program name) and runs the command, writing the
// report to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coha::cli
