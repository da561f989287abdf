#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgfb::cli {

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// status: 0 on success, 1 on a module error, 2 on a usage error. Errors are
/// written to `err` as a single JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgfb::cli
