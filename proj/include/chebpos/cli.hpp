#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chebpos {

/// Exit codes of run_cli.
enum ExitCode : int {
	kExitOk = 0,
	kExitVerificationFailed = 1,
	kExitUsage = 2,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chebpos
