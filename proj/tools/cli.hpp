#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flagdeg::cli {

// Exit codes of the flagdeg tool.
enum Exit : int {
  kOk = 0,
  kMonomial = 1,       // check: a monomial was found; richardson: correspondence fails
  kBadInput = 2,
  kOverBudget = 3,
  kIoFailure = 4,
  kCrossCheck = 5,
};

/// Runs the tool on `args` (without the program name).  All output goes to
/// `out` / `err`; nothing is written to `out` on error paths.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagdeg::cli
