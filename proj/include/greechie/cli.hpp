#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace greechie::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;  // negative finding under --strict
inline constexpr int kExitUsage = 2;    // usage, I/O, parse, or precondition error

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace greechie::cli
