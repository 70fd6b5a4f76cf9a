#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace volkenborn {

/// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `volk` command line. args excludes the program name. The default
/// output format comes from VOLK_FORMAT when --format is absent.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace volkenborn
