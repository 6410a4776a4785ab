#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fockdual::cli {

// Runs the command line given as argv-style arguments (without the program
// name). Exit codes: 0 success, 1 failed checks, 2 usage, 3 resource guard.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fockdual::cli
