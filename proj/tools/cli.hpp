#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chentype::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kDegenerate = 2,
    kParse = 3,
    kBudget = 4,
    kUnknownClaim = 5,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Flags may also come from CHENTYPE_* variables.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chentype::cli
