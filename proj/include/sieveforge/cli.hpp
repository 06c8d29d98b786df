#pragma once

#include <string>
#include <vector>

#include "sieveforge/report.hpp"

namespace sieveforge {

struct CommandResult {
  int exit_code = 0;
  std::string output;  // stdout payload
  std::string error;   // stderr payload (diagnostics, laws timing)
};

/// Dispatches one CLI invocation (argv without the program name).
/// Exit codes: 0 all verdicts pass, 1 some verdict failed or an operation
/// error, 2 usage or parse error.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace sieveforge
