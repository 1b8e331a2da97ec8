#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace porism::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kNumericalFailure = 2, kVerificationFailure = 3 };

/// Parses args (without the program name) and runs the selected subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace porism::cli
