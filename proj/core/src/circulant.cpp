#include "bgossip/circulant.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace bgossip {

GeneratingVector::GeneratingVector(CyclicGroup g, Vector e) : group(std::move(g)), entries(std::move(e)) {
  if (entries.size() != group.order()) {
    throw ValidationError("generating_vector", "length " + std::to_string(entries.size()) +
                                                   " differs from group order " + std::to_string(group.order()));
  }
}

Matrix cayley_matrix(const GeneratingVector& pi) {
  const int n = pi.size();
  Matrix m(n, n);
  for (int h = 0; h < n; ++h) {
    for (int g = 0; g < n; ++g) m(h, g) = pi.entries[pi.group.sub(h, g)];
  }
  return m;
}

bool is_cayley_matrix(const Matrix& m, const CyclicGroup& group, double tol) {
  const int n = group.order();
  if (m.rows() != n || m.cols() != n) return false;
  for (int h = 0; h < n; ++h) {
    for (int g = 0; g < n; ++g) {
      if (std::abs(m(h, g) - m(group.sub(h, g), 0)) > tol) return false;
    }
  }
  return true;
}

GeneratingVector generating_vector_of(const Matrix& m, const CyclicGroup& group, double tol) {
  if (!is_cayley_matrix(m, group, tol)) {
    throw ValidationError("matrix", "matrix is not a Cayley matrix of the given group");
  }
  return GeneratingVector(group, m.col(0));
}

std::vector<std::complex<double>> circulant_eigenvalues(const GeneratingVector& pi) {
  const CyclicGroup& group = pi.group;
  const int n = group.order();
  const int rank = group.rank();
  std::vector<std::vector<int>> coords(n);
  for (int k = 0; k < n; ++k) coords[k] = group.coords(k);

  // Phase of <k, l> as a fraction of a full turn, accumulated with a common
  // denominator so the root-of-unity table stays exact.
  long long denom = 1;
  for (int m : group.moduli()) denom = std::lcm(denom, static_cast<long long>(m));
  const bool use_table = denom <= (1LL << 22);
  std::vector<std::complex<double>> table;
  if (use_table) {
    table.resize(denom);
    for (long long j = 0; j < denom; ++j) {
      table[j] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(denom));
    }
  }

  bool symmetric = true;
  for (int k = 0; k < n && symmetric; ++k) {
    if (std::abs(pi.entries[k] - pi.entries[group.neg(k)]) > 1e-12) symmetric = false;
  }

  std::vector<std::complex<double>> out(n);
  for (int l = 0; l < n; ++l) {
    std::complex<double> sum = 0.0;
    for (int k = 0; k < n; ++k) {
      const double w = pi.entries[k];
      if (w == 0.0) continue;
      if (use_table) {
        long long phase = 0;
        for (int i = 0; i < rank; ++i) {
          const long long m = group.moduli()[i];
          phase += (static_cast<long long>(coords[k][i]) * coords[l][i] % m) * (denom / m);
        }
        sum += w * table[phase % denom];
      } else {
        double turns = 0.0;
        for (int i = 0; i < rank; ++i) {
          const int m = group.moduli()[i];
          turns += static_cast<double>(static_cast<long long>(coords[k][i]) * coords[l][i] % m) / m;
        }
        sum += w * std::polar(1.0, -2.0 * std::numbers::pi * turns);
      }
    }
    out[l] = symmetric ? std::complex<double>(sum.real(), 0.0) : sum;
  }
  return out;
}

GeneratingVector omega_vector(const CyclicGroup& group) {
  const int n = group.order();
  Vector v = Vector::Constant(n, -1.0 / n);
  v[0] += 1.0;
  return GeneratingVector(group, std::move(v));
}

}  // namespace bgossip
