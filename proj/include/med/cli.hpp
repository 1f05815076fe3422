#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace med::cli {

/// Runs one command-line invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on domain or validation failure and 2 on usage
/// errors; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace med::cli
