#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cordial::cli {

enum ExitCode : int {
  kSuccess = 0,
  /// Negative verdict or refused search: not cordial, infeasible, over budget.
  kNegative = 1,
  /// Usage error or malformed input.
  kBadInput = 2,
};

/// Runs one command line (without the program name). File arguments of "-"
/// read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cordial::cli
