#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlkit::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,   // success or affirmative verdict
  kNegative = 1,  // check failed, negative or inconclusive verdict
  kUsage = 2,     // parse, usage or input error
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlkit::cli
