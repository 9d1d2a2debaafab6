#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tbsym::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDisagree = 1,
  kExitUsage = 2,
  kExitCapped = 3,
};

/// Runs one invocation. `args` excludes the program name. Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tbsym::cli
