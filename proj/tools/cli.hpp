#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphpoly::cli {

/// Runs one command line (arguments after the program name). Writes results to
/// `out` and diagnostics to `err`. Exit codes: 0 success, 1 verification
/// failure, 2 usage or parse error, 3 bound exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphpoly::cli
