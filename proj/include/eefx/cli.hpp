#pragma once

#include <ostream>

namespace eefx {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolated = 1,
  kExitInputOrCap = 2,
  kExitContract = 3,
};

// Entry point of the `eefx` tool: gen, solve, verify, reduce, extract, bench.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eefx
