#pragma once

#include <string>
#include <vector>

namespace crossnest::cli {

enum ExitCode : int { pass = 0, verification_failed = 1, usage_error = 2 };

struct CommandResult {
  int exit_code = pass;
  std::string output;  // JSON, CSV, SVG, ASCII or plain text
  std::string error;   // diagnostics and usage text
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace crossnest::cli
