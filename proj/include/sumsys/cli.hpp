#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace sumsys::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceError = 3,
};

/// Runs one command line (without the program name). Documents go to out,
/// diagnostics to err. Never throws.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sumsys::cli
