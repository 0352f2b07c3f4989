#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hc3::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kBadInput = 2, kBudget = 3 };

/// Runs the hc3 command line (args exclude the program name). Normal output
/// goes to `out`, diagnostics and --stats to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hc3::cli
