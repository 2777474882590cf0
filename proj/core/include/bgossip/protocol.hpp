#pragma once

#include "bgossip/graph.hpp"
#include "bgossip/rng.hpp"
#include "bgossip/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bgossip {

enum class Algorithm { kBGA, kCBGA };

std::string_view to_string(Algorithm algorithm);
/// Accepts "bga" / "cbga" in any case.
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Algorithm selector with mixing weight q in (0, 1) and, for CBGA only, a
/// wake probability p in (0, 1).
class AlgoParams {
 public:
  static AlgoParams bga(double q);
  static AlgoParams cbga(double q, double p);

  Algorithm algorithm() const noexcept { return algorithm_; }
  double q() const noexcept { return q_; }
  /// Throws std::logic_error for BGA.
  double p() const;
  std::optional<double> maybe_p() const noexcept { return p_; }
  std::string describe() const;

  bool operator==(const AlgoParams&) const = default;

 private:
  AlgoParams(Algorithm a, double q, std::optional<double> p) : algorithm_(a), q_(q), p_(p) {}
  Algorithm algorithm_ = Algorithm::kBGA;
  double q_ = 0.5;
  std::optional<double> p_;
};

/// Receiver `receiver` heard `sender` in one step.
struct Transmission {
  int sender;
  int receiver;
  bool operator==(const Transmission&) const = default;
};

/// One realized step. The update matrix is never stored: it is
/// P = I - q L(t) where L(t) is the Laplacian of the transmission edges.
class StepRealization {
 public:
  StepRealization(int n, double q, std::vector<int> active, std::vector<Transmission> transmissions);

  int node_count() const noexcept { return n_; }
  double q() const noexcept { return q_; }
  /// Sorted broadcasting nodes (a single node for BGA).
  const std::vector<int>& active_set() const noexcept { return active_; }
  /// Sorted by receiver.
  const std::vector<Transmission>& transmissions() const noexcept { return transmissions_; }
  std::vector<int> receiver_set() const;

  Matrix update_matrix() const;
  Matrix realized_laplacian() const;
  /// x <- P x in O(|transmissions|).
  void apply(std::span<double> x) const;

 private:
  int n_;
  double q_;
  std::vector<int> active_;
  std::vector<Transmission> transmissions_;
};

/// Deterministic step for a chosen broadcaster (BGA).
StepRealization bga_step_for(const Graph& graph, const AlgoParams& params, int broadcaster);
/// Deterministic step for a chosen active set (CBGA); `active` is a 0/1 mask.
StepRealization cbga_step_for(const Graph& graph, const AlgoParams& params, std::span<const char> active);

StepRealization sample_bga_step(const Graph& graph, const AlgoParams& params, Rng& rng);
StepRealization sample_cbga_step(const Graph& graph, const AlgoParams& params, Rng& rng);
StepRealization sample_step(const Graph& graph, const AlgoParams& params, Rng& rng);

inline constexpr int kDefaultEnumerationCap = 16;

/// Calls `visit(probability, step)` for every possible realization: the N
/// broadcasters (BGA) or all 2^N active sets (CBGA, N <= cap). Throws
/// ValidationError when the CBGA cap is exceeded.
void for_each_realization(const Graph& graph, const AlgoParams& params,
                          const std::function<void(double, const StepRealization&)>& visit,
                          int cap = kDefaultEnumerationCap);

/// Allocation-free sampler used by trajectories: each call draws one step
/// and applies it to `x` in place. Consumes the generator exactly like
/// sample_step, so both produce the same sequence for the same seed.
class StepSampler {
 public:
  StepSampler(const Graph& graph, const AlgoParams& params);
  void step(Rng& rng, std::span<double> x);

 private:
  const Graph* graph_;
  AlgoParams params_;
  std::uint64_t threshold_ = 0;  // CBGA: a node wakes when rng() < threshold_
  std::vector<char> active_;
  std::vector<int> active_list_;
  std::vector<int> heard_count_;
  std::vector<int> heard_from_;
  std::vector<int> touched_;
};

}  // namespace bgossip
