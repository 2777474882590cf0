#pragma once

#include "bgossip/analysis.hpp"
#include "bgossip/rgg.hpp"
#include "bgossip/trajectory.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bgossip {

// ---------------------------------------------------------------- families

enum class FamilyKind { kComplete, kRing, kTorus, kLattice };

std::string_view to_string(FamilyKind kind);

/// A growing graph sequence indexed by an integer size:
/// complete / ring: N = size; torus: N = size^dimension;
/// lattice: fixed generators on Z_{2 size + 1}^d.
struct FamilySpec {
  FamilyKind kind = FamilyKind::kRing;
  int dimension = 2;                            // torus only
  std::vector<std::vector<int>> generators;     // lattice only
  Graph build(int size) const;
  std::string describe() const;
};

// ---------------------------------------------------------------- fits

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  double r_squared = 0.0;
  int points = 0;
};

/// Least squares of log(y) on log(x). Needs >= 2 points with x, y > 0.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// Index where the upper half of a list of length `count` starts.
inline std::size_t upper_half_start(std::size_t count) { return count / 2; }

// ---------------------------------------------------------------- sweeps

struct SweepPoint {
  double q = 0.0;
  std::optional<double> p;
  SpectralSummary summary;
};

struct ParetoVerdict {
  bool rate_decreasing = true;  // R strictly decreasing in q at every fixed p
  bool trB_increasing = true;   // trB strictly increasing in q at every fixed p
  bool pareto() const { return rate_decreasing && trB_increasing; }
};

struct SweepResult {
  std::string graph;
  Algorithm algorithm = Algorithm::kBGA;
  std::vector<double> q_grid;
  std::vector<double> p_grid;  // empty for BGA
  std::vector<SweepPoint> points;  // q-major, then p
  ParetoVerdict pareto;
};

/// Every (q, p) pair of the grids; grids must be strictly increasing inside (0, 1).
SweepResult sweep_tradeoff(const Graph& graph, std::string descriptor, Algorithm algorithm,
                           const std::vector<double>& q_grid, const std::vector<double>& p_grid, int workers = 1);

// ---------------------------------------------------------------- scaling

struct ScalingRow {
  int size = 0;
  int n = 0;
  double rate = 0.0;
  double one_minus_rate = 0.0;
  double trB = 0.0;
  double pi0 = 0.0;
  std::optional<double> esr_c;  // esr of the structural part C
};

struct ScalingResult {
  FamilySpec family;
  AlgoParams params = AlgoParams::bga(0.5);
  std::vector<ScalingRow> rows;
  std::size_t fit_start = 0;  // rows[fit_start..] enter the fits
  LogLogFit rate_fit;         // log(1 - R) vs log N
  LogLogFit trB_fit;          // log(trB) vs log N
};

struct ScalingOptions {
  /// First row used in fits; defaults to the upper half of the list.
  std::optional<std::size_t> fit_start;
  int workers = 1;
};

/// Exact R and trB per size using the Cayley recursion (ring fast path for
/// rings), with the invariant vector by linear solve; closed forms for the
/// complete family.
ScalingResult scaling_study(const FamilySpec& family, const AlgoParams& params, const std::vector<int>& sizes,
                            const ScalingOptions& options = {});

// ---------------------------------------------------------------- Monte Carlo bias

struct McBias {
  double mean_beta = 0.0;
  double standard_error = 0.0;
  long long runs = 0;
  long long max_steps_hits = 0;
};

/// Mean beta at consensus over trials with i.i.d. standard-normal x(0).
McBias mc_bias_estimate(const Graph& graph, const AlgoParams& params, long long trials, const SeedPolicy& seed,
                        const StopRule& stop = {}, int workers = 1);

struct RggBiasPoint {
  int n = 0;
  McBias bias;
  long long discarded = 0;  // disconnected draws rejected across runs
  double mean_degree = 0.0;
  double radius = 0.0;
  double complete_trB = 0.0;  // companion curves, exact
  double ring_trB = 0.0;
};

struct RggBiasOptions {
  std::vector<int> sizes;
  long long runs = 1000;
  double radius_factor = 0.8;  // radius = factor * sqrt(log N / N)
  AlgoParams params = AlgoParams::bga(0.5);
  SeedPolicy seed;
  StopRule stop;
  int workers = 1;
};

struct RggBiasResult {
  std::vector<RggBiasPoint> points;
  LogLogFit rgg_fit;
  LogLogFit complete_fit;
  LogLogFit ring_fit;
};

/// Fresh graph and fresh x(0) per run.
RggBiasResult rgg_bias_experiment(const RggBiasOptions& options);

// ---------------------------------------------------------------- optimal p

struct OptimalPResult {
  std::vector<double> p_grid;
  std::vector<double> rates;
  double argmin_p = 0.0;
  double min_rate = 0.0;
  double theoretical_p = 0.0;  // 1 / (d + 1)
  double distance = 0.0;       // |argmin_p - theoretical_p|
  double grid_step = 0.0;      // largest spacing of the grid around argmin_p
  std::vector<double> lower_bound_curve;  // 1 - 2 q p (1-p)^d lambda_1
  double lower_bound_argmin_p = 0.0;
};

/// Grid argmin over p of the exact CBGA rate on a regular graph.
OptimalPResult optimal_p_search(const Graph& graph, double q, const std::vector<double>& p_grid, int workers = 1);

// ---------------------------------------------------------------- weak democracy

enum class DemocracyVerdict { kVanishing, kNonVanishing, kInconclusive };
std::string_view to_string(DemocracyVerdict verdict);

struct DemocracyRow {
  int size = 0;
  int n = 0;
  double pi0 = 0.0;
  double trB = 0.0;
};

struct DemocracyResult {
  FamilySpec family;
  std::vector<DemocracyRow> rows;
  LogLogFit pi0_fit;
  LogLogFit trB_fit;
  DemocracyVerdict verdict = DemocracyVerdict::kInconclusive;
  std::optional<double> limit;  // complete family: q / (2 - q)
};

DemocracyResult weak_democracy_check(const FamilySpec& family, const AlgoParams& params, const std::vector<int>& sizes,
                                     int workers = 1);

}  // namespace bgossip
