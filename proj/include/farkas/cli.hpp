#pragma once

#include <iosfwd>

namespace farkas {

enum ExitCode : int {
    exit_pass = 0,
    exit_failure = 1,
    exit_usage = 2,
    exit_io = 3,
};

/// Subcommands: verify, search, asympt, poly. Reports go to --out (written
/// once, atomically) or to `out` when no path is given.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace farkas
