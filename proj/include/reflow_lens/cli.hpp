#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reflow::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationErrors = 1,
  kUsageOrIo = 2,
  kDomain = 3,
};

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reflow::cli
