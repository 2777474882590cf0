#pragma once

#include "bgossip/protocol.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace bgossip {

enum class RecordMode { kFull, kMetricsOnly };
enum class StopReason { kConsensus, kMaxSteps };

std::string_view to_string(StopReason reason);

struct StopRule {
  double tol = 1e-9;  // stop once max(x) - min(x) < tol
  long long max_steps = 100'000'000;
};

/// Per-step metrics from t = 0 to the stopping step inclusive.
struct TrajectoryRecord {
  std::vector<Vector> states;  // empty in metrics-only mode
  std::vector<double> averages;
  std::vector<double> dispersion;
  std::vector<double> bias;
  Vector final_state;
  long long steps = 0;
  StopReason stop_reason = StopReason::kMaxSteps;
};

/// Iterates x(t+1) = P(t) x(t) with a generator seeded from `seed`, checking
/// the stopping rule after every step.
TrajectoryRecord run_trajectory(const Graph& graph, const AlgoParams& params, std::span<const double> x0,
                                const StopRule& stop, std::uint64_t seed, RecordMode mode);

struct ConsensusOutcome {
  double initial_average = 0.0;
  double final_average = 0.0;
  double beta = 0.0;  // |final_average - initial_average|^2
  long long steps = 0;
  StopReason stop_reason = StopReason::kMaxSteps;
};

/// Fast path for bias studies: no per-step records, stopping rule checked
/// once every N steps. `x` is updated in place.
ConsensusOutcome run_to_consensus(const Graph& graph, const AlgoParams& params, std::span<double> x, Rng& rng,
                                  const StopRule& stop);

}  // namespace bgossip
