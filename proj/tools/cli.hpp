#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcrys {

/// Runs the command line (args exclude the program name). Normal output
/// goes to out, diagnostics to err. Returns the process exit code: 0 on
/// success, 1 when a check fails, 2 on usage or config errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcrys
