#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace covermotive {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInequality = 1,
  kExitMalformed = 2,
  kExitLimit = 3,
  kExitNonabelian = 4,
  kExitInternal = 5,
};

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covermotive
