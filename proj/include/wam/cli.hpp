#pragma once

#include <ostream>

namespace wam {

/// Exit codes of the command-line runner.
enum ExitCode : int {
  exit_pass = 0,
  exit_check_failed = 1,
  exit_config_error = 2,
  exit_numerical_error = 3,
};

/// Runs one subcommand; verdicts go to out, diagnostics for bad input to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wam
