#pragma once

#include <iosfwd>

namespace ifsembed::cli {

enum ExitCode : int {
  kSuccess = 0,
  kRefuted = 1,
  kUnknown = 2,
  kPrecondition = 3,
  kCounterevidence = 4,
  kUsage = 64,
};

/// Runs the command line `argv[0] <subcommand> ...`, writing the report to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ifsembed::cli
