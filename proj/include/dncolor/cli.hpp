#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dncolor {

/// Exit codes: 0 success / valid, 1 invalid input or failed verification, 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_usage = 2;

/// Worker count for parallel searches: DNCOLOR_WORKERS if set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
[[nodiscard]] unsigned configured_workers();

/// Runs the command line tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dncolor
