#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jordan::cli {

enum ExitCode : int { Ok = 0, PropertyFailure = 1, Usage = 2, Domain = 3 };

/// Runs the command line `args` (without the program name). `in` backs the "-" file argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jordan::cli
