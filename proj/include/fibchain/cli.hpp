// cli.hpp
// Command front end; kept as a library call so tests can exercise the
// dispatch, output, and exit-code contract directly.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fib {

// Exit codes: 0 success, 1 usage error, 2 domain error, 3 cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fib
