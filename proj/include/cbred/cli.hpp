#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cbred {

// Runs the command-line front end on the given arguments (without argv[0]).
// Exit codes: 0 success/verified, 1 verification negative, 2 invalid input,
// 3 internal invariant failure.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cbred
