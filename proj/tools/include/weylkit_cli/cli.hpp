#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylkit::cli {

/// Runs one invocation and returns the process exit code: 0 on success, 1
/// when a reproduction case fails, 2 on usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylkit::cli
