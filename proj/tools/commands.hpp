#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace varextropy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

/// Runs the command line `args` (args[0] is the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace varextropy::cli
