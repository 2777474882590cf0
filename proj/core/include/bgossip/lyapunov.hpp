#pragma once

#include "bgossip/moments.hpp"
#include "bgossip/rng.hpp"

namespace bgossip {

/// E[P(t)]. BGA: I - (q/N) L. CBGA: I - q p diag((1-p)^{deg-(i)}) L.
Matrix mean_matrix(const Graph& graph, const AlgoParams& params);

/// Exact second-moment operator X -> E[P(t)^T X P(t)], evaluated from the
/// pairwise sender laws. Valid for any N and both algorithms.
class LyapunovOperator {
 public:
  LyapunovOperator(const Graph& graph, const AlgoParams& params);

  int node_count() const noexcept { return graph_->node_count(); }
  Matrix apply(const Matrix& x) const;
  Matrix operator()(const Matrix& x) const { return apply(x); }

  /// Dense N^2 x N^2 representation acting on column-major vec(X):
  /// K[i + N j][a + N b] = E[P(a, i) P(b, j)]. Throws ValidationError above
  /// `max_nodes`.
  Matrix kron_matrix(int max_nodes = 40) const;

 private:
  const Graph* graph_;
  AlgoParams params_;
};

Matrix lyap_apply_exact(const Graph& graph, const AlgoParams& params, const Matrix& x);

/// Same expectation by summing over every realization (N broadcasters, or
/// all 2^N active sets for CBGA with N <= cap). Kept as an independent
/// reference for the pairwise-law evaluation.
Matrix lyap_apply_enumerated(const Graph& graph, const AlgoParams& params, const Matrix& x,
                             int cap = kDefaultEnumerationCap);

/// Dense E[P(t)] by enumeration, the reference for mean_matrix.
Matrix mean_matrix_enumerated(const Graph& graph, const AlgoParams& params, int cap = kDefaultEnumerationCap);

enum class OmegaClosedForm {
  kAuto,          // BGA general form, or the CBGA ring form
  kBgaGeneral,    // any digraph
  kBgaSymmetric,  // symmetric graphs only
  kCbgaRing,      // ring with N >= 9
};

/// Closed-form L(Omega). Throws ValidationError when the requested form does
/// not cover the graph/algorithm pair.
Matrix lyap_omega_closed_form(const Graph& graph, const AlgoParams& params,
                              OmegaClosedForm form = OmegaClosedForm::kAuto);

/// Coefficients tau of the circulant correction in the CBGA ring form of
/// L(Omega), length N. Entries sum to zero.
Vector cbga_ring_tau(int n, double p);

struct MonteCarloMatrix {
  Matrix mean;
  Matrix standard_error;
  long long trials = 0;
};

/// Sample mean of P^T X P over `trials` independent steps; trials >= 1000.
MonteCarloMatrix lyap_apply_mc(const Graph& graph, const AlgoParams& params, const Matrix& x, long long trials,
                               const SeedPolicy& seed);

/// Omega = I - 11^T / N.
Matrix omega(int n);

}  // namespace bgossip
