#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clusterdyn/cli/io.hpp"

namespace clusterdyn::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Deliberate defects for exercising the failure path of `verify`.
enum class Fault {
  None,
  LambdaSign,  ///< replaces lambda by 1/lambda, i.e. flips the sign of log lambda
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int samples = 20;
  Fault fault = Fault::None;
};

/// periodicity, semiconjugacy, presymplectic, normalform, integrals.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws Error on an unknown name.
std::vector<SuiteResult> run_verify(const std::string& suite, const VerifyOptions& opts);

json to_json(const std::vector<SuiteResult>& results);

}  // namespace clusterdyn::cli
