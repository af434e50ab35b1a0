#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace setrep {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_input_error = 1,
  exit_not_applicable = 2,
  exit_budget = 3,
};

/// Runs the `setrep` command line; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace setrep
