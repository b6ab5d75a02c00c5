#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace nuqft {

// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< runtime or I/O failure, or a failed verify
inline constexpr int kExitUsage = 2;

/// Runs the `nuqft` command line. `args` excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nuqft
