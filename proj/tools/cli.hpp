#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ta::cli {

// Runs one command line (without the program name). Exit codes: 0 ok, 1 verdict violations, 2 usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ta::cli
