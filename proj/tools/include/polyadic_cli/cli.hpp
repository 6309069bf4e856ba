#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyadic::cli {

enum ExitCode : int {
  exit_pass = 0,
  exit_fail = 1,
  exit_parse = 2,
  exit_budget = 3,
};

// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyadic::cli
