#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dhero::cli {

enum ExitCode : int {
    kOk = 0,
    kFail = 1,       ///< check failed, counterexample found, nothing found
    kUsage = 2,      ///< bad arguments, unreadable input, violated precondition
    kResource = 3,   ///< a configured search ceiling was hit
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dhero::cli
