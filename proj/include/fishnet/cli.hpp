#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fishnet {

// Exit codes: 0 success, 1 check failed, 2 input error, 3 budget/exhaustion.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fishnet
