#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omegatt {

/// Exit statuses of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the driver on argv without the program name.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace omegatt
