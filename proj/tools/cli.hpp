#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sensorcfg::cli {

enum ExitCode : int {
  kOk = 0,
  kPrecondition = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
  kDiscrepancy = 4,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sensorcfg::cli
