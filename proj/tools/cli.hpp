#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lutz::cli {

/// Runs one invocation. `args[0]` is the program name. Data goes to `out`,
/// diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lutz::cli
