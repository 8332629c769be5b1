#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace exclt::cli {

enum ExitCode : int {
  kPass = 0,
  kRuntimeError = 1,
  kConfigError = 2,
  kFail = 3,
  kInconclusive = 4,
};

/// Runs the command line `args` (without the program name). The RNG seed
/// may also come from the EXCLT_SEED environment variable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace exclt::cli
