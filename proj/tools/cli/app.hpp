#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matchtime::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
};

// Runs the command line `args` (without the program name). Tables go to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matchtime::cli
