#pragma once

#include "bgossip/circulant.hpp"
#include "bgossip/lyapunov.hpp"

#include <string>
#include <string_view>

namespace bgossip {

/// Linear recursion pi(t+1) = (C + T) pi(t) on generating vectors of the
/// Cayley second-moment matrices Delta(t+1) = L(Delta(t)).
struct MsaRecursion {
  CyclicGroup group;
  Matrix C;
  Matrix T;
  std::string construction;  // "generic", "operator", "ring_bga", "ring_cbga"

  Matrix M() const { return C + T; }
  int size() const noexcept { return group.order(); }
};

enum class MsaRoute {
  kAuto,      // ring fast path for N >= 9, generic otherwise
  kGeneric,   // M(h, g) = sum_b E[P(b+g, h) P(b, 0)] from the pairwise laws
  kOperator,  // column g = generating vector of L(cayl(e_g)); O(N^3 d^2), small N
  kRingFast,  // explicit ring matrices, ring graphs only
};

/// M built from the pairwise sender laws in O(N d^3). Requires a Cayley graph.
Matrix msa_matrix_generic(const Graph& graph, const AlgoParams& params);

/// M built column by column from the Lyapunov operator on Cayley basis matrices.
Matrix msa_matrix_via_operator(const Graph& graph, const AlgoParams& params);

/// The structural part C: BGA I - (q/N)(L + L^T); CBGA on a d-regular graph
/// (I - q p (1-p)^d L^T)(I - q p (1-p)^d L). L acts on generating vectors.
Matrix msa_c_part(const Graph& graph, const AlgoParams& params);

/// Explicit ring recursions. BGA needs N >= 5, CBGA needs N >= 9.
MsaRecursion msa_ring_bga(int n, double q);
MsaRecursion msa_ring_cbga(int n, double q, double p);

/// Throws ValidationError when the graph carries no Cayley structure.
MsaRecursion msa_recursion_cayley(const Graph& graph, const AlgoParams& params, MsaRoute route = MsaRoute::kAuto);

enum class InvariantMethod { kEigen, kLinearSolve, kFixedPoint };

struct InvariantOptions {
  InvariantMethod method = InvariantMethod::kEigen;
  double unit_tolerance = 1e-9;          // eigen path: |lambda - 1| bound
  double fixed_point_tolerance = 1e-14;  // fixed-point path: successive change
  long long max_iterations = 50'000'000;
};

/// pi' with M pi' = pi' and sum(pi') = 1. The eigen path throws
/// ComputationError when eigenvalue 1 is missing or not simple.
Vector invariant_vector(const Matrix& m, const InvariantOptions& options = {});

}  // namespace bgossip
