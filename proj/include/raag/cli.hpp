#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace raag::cli {

enum ExitCode { kPass = 0, kCertificationFailure = 1, kInputError = 2, kBudgetExhausted = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raag::cli
