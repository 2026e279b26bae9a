#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rfdepth {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,
  kExitShape = 3,
  kExitInapplicable = 4,
  kExitUndefined = 5,
};

/// args excludes the program name. Results go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rfdepth
