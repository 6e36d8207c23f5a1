#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace necone {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitConditionsUnmet = 2,
    kExitVerifyFailed = 3,
};

/// Runs one command. args[0] is the program name. Reports go to `out` unless
/// --output is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace necone
