#include "oracles.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oracle {

Matrix bga_matrix(const Graph& g, double q, int s) {
  const int n = g.node_count();
  Matrix p = Matrix::Identity(n, n);
  for (int u = 0; u < n; ++u) {
    if (g.has_edge(s, u)) {
      p(u, u) = 1.0 - q;
      p(u, s) = q;
    }
  }
  return p;
}

Matrix cbga_matrix(const Graph& g, double q, unsigned long long mask) {
  const int n = g.node_count();
  Matrix p = Matrix::Identity(n, n);
  for (int u = 0; u < n; ++u) {
    if (mask >> u & 1ULL) continue;  // half duplex
    int heard = 0;
    int from = -1;
    for (int v = 0; v < n; ++v) {
      if (v != u && (mask >> v & 1ULL) && g.has_edge(v, u)) {
        ++heard;
        from = v;
      }
    }
    if (heard == 1) {
      p(u, u) = 1.0 - q;
      p(u, from) = q;
    }
  }
  return p;
}

std::vector<Weighted> realizations(const Graph& g, const AlgoParams& params) {
  const int n = g.node_count();
  std::vector<Weighted> out;
  if (params.algorithm() == bgossip::Algorithm::kBGA) {
    for (int s = 0; s < n; ++s) out.push_back({1.0 / n, bga_matrix(g, params.q(), s)});
    return out;
  }
  if (n > 20) throw std::invalid_argument("oracle enumeration limited to 20 nodes");
  const double pw = params.p();
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    const int k = std::popcount(mask);
    const double w = std::pow(pw, k) * std::pow(1.0 - pw, n - k);
    out.push_back({w, cbga_matrix(g, params.q(), mask)});
  }
  return out;
}

Matrix mean(const Graph& g, const AlgoParams& params) {
  const int n = g.node_count();
  Matrix m = Matrix::Zero(n, n);
  for (const auto& r : realizations(g, params)) m += r.weight * r.p;
  return m;
}

Matrix lyapunov(const Graph& g, const AlgoParams& params, const Matrix& x) {
  const int n = g.node_count();
  Matrix m = Matrix::Zero(n, n);
  for (const auto& r : realizations(g, params)) m += r.weight * (r.p.transpose() * x * r.p);
  return m;
}

Matrix kron_operator(const Graph& g, const AlgoParams& params) {
  const int n = g.node_count();
  Matrix k = Matrix::Zero(n * n, n * n);
  for (const auto& r : realizations(g, params)) {
    const Matrix pt = r.p.transpose();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) k.block(i * n, j * n, n, n) += r.weight * pt(i, j) * pt;
  }
  return k;
}

Matrix literal_msa(const Graph& g, const AlgoParams& params) {
  const auto& c = g.cayley();
  if (!c) throw std::invalid_argument("literal_msa needs a Cayley graph");
  const int n = g.node_count();
  const auto rs = realizations(g, params);
  Matrix m(n, n);
  for (int e = 0; e < n; ++e) {
    Matrix basis = Matrix::Zero(n, n);
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (c->group.sub(h, k) == e) basis(h, k) = 1.0;
    Matrix img = Matrix::Zero(n, n);
    for (const auto& r : rs) img += r.weight * (r.p.transpose() * basis * r.p);
    m.col(e) = img.col(0);
  }
  return m;
}

double rate_by_expansion(const Graph& g, const AlgoParams& params) {
  const int n = g.node_count();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(kron_operator(g, params).cast<std::complex<double>>());
  const Matrix om = Matrix::Identity(n, n) - Matrix::Constant(n, n, 1.0 / n);
  const Eigen::VectorXcd target = Eigen::Map<const Vector>(om.data(), n * n).cast<std::complex<double>>();
  const Eigen::VectorXcd coeff = es.eigenvectors().partialPivLu().solve(target);
  double r = 0.0;
  for (int i = 0; i < n * n; ++i) {
    if (std::abs(coeff[i]) * es.eigenvectors().col(i).norm() > 1e-8) r = std::max(r, std::abs(es.eigenvalues()[i]));
  }
  return r;
}

bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.node_count();
  if (n != b.node_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = a.edges();
  do {
    const bool ok = std::all_of(edges.begin(), edges.end(),
                                [&](const auto& e) { return b.has_edge(perm[e.first], perm[e.second]); });
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<double> moduli(const Matrix& m) {
  Eigen::EigenSolver<Matrix> es(m, false);
  std::vector<double> out;
  for (const auto& l : es.eigenvalues()) out.push_back(std::abs(l));
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace oracle
