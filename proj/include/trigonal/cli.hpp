#pragma once

#include <iosfwd>

namespace trigonal {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidParameters = 2,
    kExitZeroTangent = 3,
    kExitOracleDisagreement = 4,
    kExitStructural = 5,
};

/// Runs the `trigonal` command line; reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trigonal
