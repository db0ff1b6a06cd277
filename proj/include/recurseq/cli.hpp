#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recurseq::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kBoundExceeded = 3,
};

// Runs one command line (args excludes the program name).  Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recurseq::cli
