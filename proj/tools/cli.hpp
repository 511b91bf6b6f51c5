#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sc::cli {

// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_parse_error = 2,
    exit_precondition = 3,
};

// Parses the arguments (argv[0] is the program name), runs the subcommand and
// writes the human-readable report to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sc::cli
