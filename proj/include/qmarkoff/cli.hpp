#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmarkoff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Everything is
/// written to `out` only after the command has finished computing.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmarkoff::cli
