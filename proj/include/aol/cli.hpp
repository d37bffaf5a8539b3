#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aol {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitBlowUp = 3,
  kExitVerify = 4,
};

/// Subcommands simulate | defect | structure | exponents | verify.
/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

/// Keeps freed field buffers on the heap instead of returning them to the
/// system; spectral steps allocate many short-lived arrays of a few hundred
/// kilobytes. Call once at program start.
void keep_freed_memory();

}  // namespace aol
