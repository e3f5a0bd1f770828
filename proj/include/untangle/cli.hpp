#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace untangle {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitNotPlanar = 1,   ///< `verify` on a non-planar result
    kExitParse = 2,       ///< malformed input file or command line
    kExitPrecondition = 3,
    kExitTooLarge = 4,
    kExitInternal = 5,
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace untangle
