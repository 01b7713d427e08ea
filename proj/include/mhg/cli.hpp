#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mhg {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitDiscrepancy = 3,
};

/// Runs the mhg command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mhg
