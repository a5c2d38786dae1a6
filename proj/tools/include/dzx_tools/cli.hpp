#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dzx::cli {

enum ExitCode : int {
    ok = 0,
    not_equal = 1,
    input_error = 2,
    non_affine = 3,
    internal_error = 4,
};

/// Runs the command line `args` (without the program name). File argument "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dzx::cli
