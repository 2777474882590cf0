#pragma once

#include "bgossip/msa.hpp"
#include "bgossip/spectral.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bgossip {

enum class RateMethod { kAuto, kClosedForm, kCayleyExact, kReachableSpaceExact, kBoundsOnly };
enum class BiasMethod { kAuto, kNone, kClosedForm, kCayley, kIterative, kGeneral };

std::string_view to_string(RateMethod method);
std::string_view to_string(BiasMethod method);
std::optional<RateMethod> parse_rate_method(std::string_view name);
std::optional<BiasMethod> parse_bias_method(std::string_view name);

inline constexpr int kDefaultExactCap = 40;

struct RateBounds {
  double lower = 0.0;  // esr(mean matrix)^2
  double upper = 1.0;  // sr(L(Omega))
  /// Family-specific estimates, e.g. "laplacian_lower", "regular_lower",
  /// "ring_asymptotic_lower".
  std::map<std::string, double> extras;
  std::vector<std::string> flags;
};

struct SpectralSummary {
  int n = 0;
  AlgoParams params = AlgoParams::bga(0.5);
  RateMethod method = RateMethod::kBoundsOnly;
  std::optional<double> rate;
  double lower = 0.0;
  double upper = 1.0;
  std::map<std::string, double> extras;
  BiasMethod bias_method = BiasMethod::kNone;
  std::optional<double> trB;
  Vector invariant_vector;  // Cayley analyses only
  std::optional<Matrix> B;
  std::optional<int> reachable_dimension;
  std::vector<std::string> discrepancy_flags;
};

struct AnalyzeOptions {
  RateMethod rate_method = RateMethod::kAuto;
  BiasMethod bias_method = BiasMethod::kAuto;
  bool full_bias_matrix = false;
  bool compute_bounds = true;
  int exact_cap = kDefaultExactCap;  // N limit for reachable-space and general-bias methods
  InvariantMethod invariant_method = InvariantMethod::kEigen;
  MsaRoute msa_route = MsaRoute::kAuto;
};

/// esr(mean)^2 <= R <= sr(L(Omega)), with Cayley and complete-graph
/// shortcuts; `msa` may pass an already built MSA matrix.
RateBounds rate_bounds(const Graph& graph, const AlgoParams& params, const Matrix* msa = nullptr);

SpectralSummary analyze(const Graph& graph, const AlgoParams& params, const AnalyzeOptions& options = {});

/// Rate fields only.
SpectralSummary rate(const Graph& graph, const AlgoParams& params, RateMethod method = RateMethod::kAuto);
/// Bias fields only (bounds skipped).
SpectralSummary bias(const Graph& graph, const AlgoParams& params, BiasMethod method = BiasMethod::kAuto,
                     bool full_matrix = false);

/// E[rho] (left invariant probability vector of the mean matrix) and
/// E[rho rho^T] (fixed point of L normalized to 1^T X 1 = 1), where the
/// consensus value is rho^T x(0).
Vector expected_rho(const Graph& graph, const AlgoParams& params);
Matrix expected_rho_outer(const Graph& graph, const AlgoParams& params, int cap = kDefaultExactCap);

/// Bias matrix from the two moments above, symmetrized.
Matrix bias_matrix_general(const Graph& graph, const AlgoParams& params, int cap = kDefaultExactCap);

struct IterativeBiasOptions {
  double tolerance = 1e-13;
  long long max_iterations = 10'000'000;
};
/// Iterates Delta <- L(Delta) from 11^T; needs a doubly stochastic mean matrix.
Matrix bias_matrix_iterative(const Graph& graph, const AlgoParams& params, const IterativeBiasOptions& options = {});

struct CompleteClosedForms {
  double weight = 1.0;  // 1 for BGA, N p (1-p)^{N-1} for CBGA
  double rate = 0.0;
  double trB = 0.0;
  Matrix B;
  /// Operator on span{I, 11^T / N}: coefficient vectors (alpha, beta) of
  /// alpha I + beta 11^T / N.
  Eigen::Matrix2d reduced_operator;
  Eigen::Vector2d unit_eigenvector;  // proportional to (q, 2(1-q))
};

CompleteClosedForms complete_closed_forms(int n, const AlgoParams& params);

}  // namespace bgossip
