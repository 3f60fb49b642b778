#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace propcat {

// Run the command-line interface on the given arguments (program name
// excluded), writing results to out and diagnostics to err. Returns the
// process exit code: 0 on success and passing checks, 1 when a check
// fails, 2 on usage or parse errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace propcat
