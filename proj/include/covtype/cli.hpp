#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covtype::cli {

/// Exit codes: 0 success / true, 1 domain-negative or pipeline failure, 2 input error.
enum ExitCode : int { ok = 0, negative = 1, input_error = 2 };

/// Runs the command line tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covtype::cli
