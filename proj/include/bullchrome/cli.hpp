#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bullchrome {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitCapExceeded = 3,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` (or --out), diagnostics to `err`; "-" reads graphs from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bullchrome
