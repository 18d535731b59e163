#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace depcalc {

/// Exit status of `run`.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitInputError = 2 };

/// Runs the depcalc command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace depcalc
