#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snccc::cli {

/// Process exit codes of the snccc tool.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kInfeasible = 3,
};

/// Runs the tool on `args` (without the program name).  Normal output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snccc::cli
