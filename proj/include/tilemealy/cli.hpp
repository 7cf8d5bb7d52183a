#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tilemealy {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,     // conflict found, lemma failed, input rejected
  kExitUsage = 2,        // parse errors, bad arguments
  kExitUnknown = 3,      // a budget ran out before an answer
  kExitPrecondition = 4  // verify-* inputs violate a precondition
};

// Runs one command line (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tilemealy
