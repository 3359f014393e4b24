#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gms::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs the `gms` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gms::cli
