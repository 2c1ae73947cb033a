#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evodiv {

/// Command-line driver behind the evodiv binary. `args` excludes the program
/// name. Returns 0 on success, 1 on usage/configuration errors, 2 on runtime
/// failures.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace evodiv
