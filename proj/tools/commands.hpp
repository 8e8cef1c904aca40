#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace smale::cli {

/// Runs the command line `args` (without the program name), writing to
/// `out` and `err`. Returns the process exit code: 0 on success or a
/// classifier verdict, 1 on a domain error, 2 on a parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smale::cli
