#pragma once

#include <string>
#include <vector>

namespace vachar::cli {

enum ExitCode : int { Ok = 0, UsageError = 1, VerificationFailed = 2, InternalError = 3 };

struct RunResult {
  int exit_code = Ok;
  std::string output;  // the report (JSON or TSV)
  std::string error;   // diagnostics for the user
};

/// Runs one command line (without the program name). Never throws.
RunResult run(const std::vector<std::string>& args);

/// Default cutoff: $VACHAR_CUTOFF if set, else 4.
std::string default_cutoff();

}  // namespace vachar::cli
