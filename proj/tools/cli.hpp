#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinfock::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinfock::cli
