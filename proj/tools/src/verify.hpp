#pragma once

#include "bgossip/protocol.hpp"

#include <string>
#include <vector>

namespace bgossip::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  long long samples = 10'000;
  std::uint64_t seed = 1;
  int enumeration_cap = 12;
};

/// Invariant and oracle checks for one configuration. Checks that do not
/// apply (e.g. Cayley recursions on a non-Cayley graph) are skipped.
std::vector<CheckResult> run_verification(const Graph& graph, const AlgoParams& params, const VerifyOptions& options);

}  // namespace bgossip::cli
