#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halfstep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;

/// Runs one command line (program name excluded). Results go to `out`,
/// diagnostics to `err`. Returns the process exit code:
///   0  success (solve: Converged or ConvergedWithWarnings)
///   1  usage, parse or input errors
///   2  the method ran and failed, or no method could be chosen
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halfstep::cli
