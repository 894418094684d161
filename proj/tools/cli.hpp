#pragma once

#include <iosfwd>

namespace trapset::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsage = 2,
  kInputError = 3,
};

/// Runs one command line; summaries go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trapset::cli
