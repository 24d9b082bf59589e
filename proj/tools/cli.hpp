#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mb::cli {

/// Runs one command line (without the program name). Returns the exit
/// code: 0 success, 1 mathematical failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mb::cli
