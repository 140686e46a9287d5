#pragma once

#include <string>
#include <vector>

namespace apolar::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kResourceCap = 3 };

struct CommandResult {
  int exit_code = kOk;
  std::string out;  // stdout payload
  std::string err;  // diagnostics, errors, timings
};

/// args excludes the program name.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace apolar::cli
