#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/scenario.hpp"

namespace lefschetz {

enum ExitCode : int { exit_ok = 0, exit_input = 1, exit_singular = 2, exit_verify_failed = 3 };

/// Runs the command line (without the program name). rules replaces the
/// index rules used by the verify suite.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const IndexRules& rules = {});

/// Exit status for a library error.
int exit_code_for(ErrorCode code);

}  // namespace lefschetz
