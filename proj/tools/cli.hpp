#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nanores::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kDomainError = 3,
  kSolverFailure = 4,
  kIoError = 5,
};

/// Entry point of the `nanores` command; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nanores::cli
