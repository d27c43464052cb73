#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cremona/error.hpp"

namespace cremona::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kParseFailure = 2,
  kDomainFailure = 3,
};

/// Exit code for a library error: malformed input (ParseError,
/// UnknownVariable, ArityMismatch) is 2, everything else is 3.
int exit_code_for(ErrorKind kind);

/// Runs one subcommand. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cremona::cli
