#ifndef SYMRED_CLI_HPP
#define SYMRED_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace symred {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitClean = 0,
  kExitCounterexample = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

/// Runs one invocation; args excludes the program name. Reports go to
/// `out`, diagnostics and warnings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symred

#endif  // SYMRED_CLI_HPP
