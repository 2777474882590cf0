#pragma once

#include "bgossip/types.hpp"

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace bgossip {

std::vector<std::complex<double>> eigenvalues(const Matrix& m);

/// Largest eigenvalue modulus.
double spectral_radius(std::span<const std::complex<double>> spectrum);
double spectral_radius(const Matrix& m);
/// Uses the symmetric solver; `m` must be symmetric.
double spectral_radius_symmetric(const Matrix& m);

/// Largest modulus after removing the one eigenvalue nearest to 1. Throws
/// ComputationError when that eigenvalue is farther than `unit_tolerance`
/// from 1.
double essential_spectral_radius(std::span<const std::complex<double>> spectrum, double unit_tolerance = 1e-9);
double essential_spectral_radius(const Matrix& m, double unit_tolerance = 1e-9);

struct ReachableSpace {
  int dimension = 0;
  double spectral_radius = 0.0;
  Matrix projected;  // Hessenberg matrix of the operator on the orthonormal basis
};

/// Krylov space of (op, start) orthonormalized in the trace inner product,
/// with two Gram-Schmidt passes per step. Growth stops once a new direction
/// has residual norm below `tolerance` relative to its image. Throws
/// ComputationError if the space exceeds `max_dimension`.
///
/// `project`, when given, is the orthogonal projector onto an op-invariant
/// subspace containing `start`; it is reapplied after every orthogonalization
/// pass so the basis cannot drift out of that subspace.
ReachableSpace reachable_space(const std::function<Matrix(const Matrix&)>& op, const Matrix& start,
                               double tolerance = 1e-10, int max_dimension = 4096,
                               const std::function<void(Matrix&)>& project = {});

}  // namespace bgossip
