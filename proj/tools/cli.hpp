#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace centext::cli {

enum ExitCode : int { ok = 0, property_failure = 1, overflow = 2, usage = 3 };

// Runs the command line in args (args[0] is the program name), writing the
// report to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace centext::cli
