#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparking::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kInputError = 2,
  kPreconditionFailure = 3,
};

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The U_{4,2} demo table, rendered exactly as `demo u42` prints it.
std::string u42_table();

}  // namespace sparking::cli
