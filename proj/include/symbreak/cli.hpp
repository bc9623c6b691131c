#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symbreak::cli {

/// Exit codes of the command-line front end.
enum ExitCode {
  kOk = 0,
  kDomainError = 2,      // DomainError / ShapeError / RangeError / CapacityError
  kConsistencyError = 3,
  kUsage = 64,           // unknown verb or bad flags
  kParseFailure = 65,    // unreadable facts file
  kInternal = 70,
};

/// Runs one command; args exclude the program name. All output goes to the
/// given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symbreak::cli
