#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace centspec::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalid = 2, kBudget = 3 };

/// Runs one command line (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace centspec::cli
