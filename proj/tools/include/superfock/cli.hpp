#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superfock::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kConfigError = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Output depends only on the arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker cap from SUPERFOCK_THREADS, else the hardware concurrency (at least 1).
unsigned worker_count();

}  // namespace superfock::cli
