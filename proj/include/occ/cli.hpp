#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "occ/error.hpp"

namespace occ::cli {

enum ExitCode : int { Ok = 0, Validation = 2, Computation = 3, CheckFailed = 4 };

int exit_code_for(ErrorKind kind);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace occ::cli
