#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fris::cli {

// Runs the command line tool. args excludes the program name. Returns the
// process exit code; output and diagnostics go to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fris::cli
