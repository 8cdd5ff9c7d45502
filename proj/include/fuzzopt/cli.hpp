#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzopt::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kNoGHDerivative = 3,
  kNoCriticalPoint = 4,
};

/// Runs `fuzzopt rank|eval|diff|solve ...`. `args` excludes the program
/// name. Stdout receives output only on success; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzopt::cli
