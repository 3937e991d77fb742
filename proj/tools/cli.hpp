#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stabreg::cli {

enum ExitCode : int { ok = 0, certified_fail = 1, input_error = 2, capacity_error = 3 };

/// Parses `args` (without the program name), runs one subcommand and writes
/// its JSON result, or a JSON error object, to `out`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabreg::cli
