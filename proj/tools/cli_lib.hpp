// The rigidlab command line, exposed as a library so tests can drive it
// in-process with captured streams.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigidlab::cli {

// Runs the command line (args exclude the program name) and returns the
// process exit code: 0 success, 2 usage error, 3 budget error, 4 hypothesis
// failure (reported, not crashed), 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigidlab::cli
