#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dicke::cli {

// Exit codes. Stable; scripts depend on them.
enum ExitCode : int {
    kOk = 0,
    kValidation = 2,   // bad flags, bad parameters, malformed config
    kNumerical = 3,    // convergence, truncation, failed identity check
    kIo = 4,           // unreadable input or unwritable output
};

// Runs the `dicke` command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dicke::cli
