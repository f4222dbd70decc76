#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace absorb::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitParseOrConfig = 2,
  kExitDegenerate = 3,
  kExitDimension = 4,
  kExitUnsupportedOrder = 5,
};

/// Runs the tool with `args` (program name excluded), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace absorb::cli
