#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pedlab {

/// Parses and executes one command line (without the program name). Results
/// go to out, diagnostics to err. Returns 0 on success, 1 on verification or
/// computation failure, 2 on input or usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pedlab
