#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidinv::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kConsistency = 3,
  kCapability = 4,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// usage errors and progress to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidinv::cli
