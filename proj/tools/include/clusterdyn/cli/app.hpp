#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterdyn::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kResourceExhausted = 3,
};

/// Entry point of the `clusterdyn` tool. Output goes to `out` unless --out
/// names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clusterdyn::cli
