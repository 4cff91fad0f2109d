#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bifree::cli {

// Exit codes.
constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

/// Runs one command line (without the program name). Everything is written
/// to out/err; nothing touches the process streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bifree::cli
