#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cauchon::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalid = 1, // validate: the grid is not a Cauchon diagram
    kError = 2,
};

/// Runs one invocation. `args` excludes the program name. Errors are written
/// to `err` as a single line starting with "error: ".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

} // namespace cauchon::cli
