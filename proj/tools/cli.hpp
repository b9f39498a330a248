#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domrecon::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kUsage = 2;
inline constexpr int kSizeLimit = 3;

// Runs one command. Data goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domrecon::cli
