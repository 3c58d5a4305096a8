#pragma once

// Command-line front end. Exit codes: 0 pass / success, 1 check failed or
// precondition refused, 2 input error, 3 internal error.

#include <iosfwd>
#include <string>
#include <vector>

namespace conformal {

/// Runs one command; `args` excludes the program name. "-" (or an omitted
/// input) reads the document from `in`.
int execute(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace conformal
