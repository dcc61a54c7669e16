#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aieo {

// Exit statuses of the aieo command.
enum ExitStatus : int {
    kExitOk = 0,
    kExitUsage = 1,         // bad flags, unreadable syntax
    kExitValidation = 2,    // well-formed input that breaks a rule
    kExitInconsistent = 3,  // `check` found disjointness violations
    kExitIo = 4,
};

// Runs the command line `args` (args[0] is the program name). Results go to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aieo
