#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopflab {

/// Exit status of a command.
enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// Dispatch `args` (without the program name) to a subcommand:
/// check, nf, pair, models, podles, twoparticle, igl.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopflab
