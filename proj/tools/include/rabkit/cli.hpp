#ifndef RABKIT_CLI_HPP
#define RABKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rab::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kInputError = 2, kBoundError = 3, kInternalError = 4 };

/// Runs one command line (without the program name). Primary output goes to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rab::cli

#endif  // RABKIT_CLI_HPP
