#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cde::cli {

/// Process exit codes.  Stable contract.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInfeasible = 2,
  kSearchExhausted = 3,
  kVerificationFailed = 4,
  kBudgetExceeded = 5,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cde::cli
