#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isolab {

// Runs the command line given without the program name. Returns the exit
// code: 0 pass, 1 a queried check failed, 2 usage or load error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isolab
