#include "bgossip/trajectory.hpp"

#include <algorithm>
#include <numeric>

namespace bgossip {

std::string_view to_string(StopReason reason) {
  return reason == StopReason::kConsensus ? "consensus" : "max_steps";
}

namespace {

double spread(std::span<const double> x) {
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo;
}

double average(std::span<const double> x) { return std::accumulate(x.begin(), x.end(), 0.0) / x.size(); }

void check_inputs(const Graph& graph, std::size_t len, const StopRule& stop) {
  if (static_cast<int>(len) != graph.node_count()) throw ValidationError("x0", "length differs from N");
  if (!(stop.tol > 0.0)) throw ValidationError("tol", "tolerance must be > 0");
  if (stop.max_steps < 0) throw ValidationError("max_steps", "must be >= 0");
}

}  // namespace

TrajectoryRecord run_trajectory(const Graph& graph, const AlgoParams& params, std::span<const double> x0,
                                const StopRule& stop, std::uint64_t seed, RecordMode mode) {
  check_inputs(graph, x0.size(), stop);
  std::vector<double> x(x0.begin(), x0.end());
  const double avg0 = average(x);
  TrajectoryRecord rec;
  auto record = [&] {
    const double avg = average(x);
    double d = 0.0;
    for (double v : x) d += (v - avg) * (v - avg);
    rec.averages.push_back(avg);
    rec.dispersion.push_back(d / x.size());
    rec.bias.push_back((avg - avg0) * (avg - avg0));
    if (mode == RecordMode::kFull) rec.states.push_back(Eigen::Map<const Vector>(x.data(), x.size()));
  };
  Rng rng(seed);
  StepSampler sampler(graph, params);
  record();
  long long t = 0;
  while (spread(x) >= stop.tol && t < stop.max_steps) {
    sampler.step(rng, x);
    ++t;
    record();
  }
  rec.steps = t;
  rec.stop_reason = spread(x) < stop.tol ? StopReason::kConsensus : StopReason::kMaxSteps;
  rec.final_state = Eigen::Map<const Vector>(x.data(), x.size());
  return rec;
}

ConsensusOutcome run_to_consensus(const Graph& graph, const AlgoParams& params, std::span<double> x, Rng& rng,
                                  const StopRule& stop) {
  check_inputs(graph, x.size(), stop);
  ConsensusOutcome out;
  out.initial_average = average(x);
  StepSampler sampler(graph, params);
  const long long block = graph.node_count();
  long long t = 0;
  while (spread(x) >= stop.tol && t < stop.max_steps) {
    const long long end = std::min(stop.max_steps, t + block);
    for (; t < end; ++t) sampler.step(rng, x);
  }
  out.steps = t;
  out.stop_reason = spread(x) < stop.tol ? StopReason::kConsensus : StopReason::kMaxSteps;
  out.final_average = average(x);
  out.beta = (out.final_average - out.initial_average) * (out.final_average - out.initial_average);
  return out;
}

}  // namespace bgossip
