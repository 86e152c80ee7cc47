#pragma once

#include <iosfwd>

namespace hogkit::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kValidationError = 2,
  kInvariantError = 3,
  kVerifyFailed = 4,
};

/// Runs `hogkit <subcommand> ...`; stdin is read when no --input is given.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hogkit::cli
