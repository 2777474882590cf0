#pragma once

#include "bgossip/group.hpp"
#include "bgossip/types.hpp"

#include <complex>
#include <vector>

namespace bgossip {

/// Vector indexed by group elements that generates the Cayley matrix
/// cayl(pi)[h][g] = pi[h - g].
struct GeneratingVector {
  CyclicGroup group;
  Vector entries;

  GeneratingVector(CyclicGroup g, Vector e);
  int size() const noexcept { return group.order(); }
};

Matrix cayley_matrix(const GeneratingVector& pi);

/// Column 0 of a Cayley matrix, the exact inverse of cayley_matrix.
/// Throws ValidationError when `m` is not translation invariant within `tol`.
GeneratingVector generating_vector_of(const Matrix& m, const CyclicGroup& group, double tol = 1e-12);

/// True when m[h][g] depends only on h - g.
bool is_cayley_matrix(const Matrix& m, const CyclicGroup& group, double tol = 1e-12);

/// Character sums lambda_l = sum_k pi[k] exp(-2 pi i <k, l>), one per group
/// element l (index order of the group). Works for any number of cyclic
/// factors. When pi[k] == pi[-k] within 1e-12 the imaginary parts are zeroed.
std::vector<std::complex<double>> circulant_eigenvalues(const GeneratingVector& pi);

/// Generating vector of e_0 - 1/N, i.e. of Omega = I - 11^T/N.
GeneratingVector omega_vector(const CyclicGroup& group);

}  // namespace bgossip
