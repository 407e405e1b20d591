#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umbral::cli {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the command-line tool. `args` excludes the program name.
/// Subcommands: value, table, psi, denom, verify.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace umbral::cli
