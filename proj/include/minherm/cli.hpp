#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minherm::cli {

/// Runs the command line given the arguments after the program name.
/// Exit codes: 0 success, 2 invalid input, 3 non-convergence under --strict,
/// 64 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace minherm::cli
