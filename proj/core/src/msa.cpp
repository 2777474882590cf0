#include "bgossip/msa.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>
#include <limits>

namespace bgossip {

namespace {

const CayleyStructure& require_cayley(const Graph& graph) {
  if (!graph.cayley()) throw ValidationError("graph", "graph carries no Cayley structure");
  return *graph.cayley();
}

Matrix circulant(int n, std::initializer_list<std::pair<int, double>> entries) {
  Vector gen = Vector::Zero(n);
  for (const auto& [k, v] : entries) gen[((k % n) + n) % n] += v;
  Matrix c(n, n);
  for (int h = 0; h < n; ++h) {
    for (int g = 0; g < n; ++g) c(h, g) = gen[((h - g) % n + n) % n];
  }
  return c;
}

}  // namespace

Matrix msa_matrix_generic(const Graph& graph, const AlgoParams& params) {
  const CyclicGroup& group = require_cayley(graph).group;
  const int n = graph.node_count();
  const double q = params.q();
  // Only rows b with P(b, 0) possibly nonzero contribute: b = 0 or b hears 0.
  std::vector<int> rows{0};
  for (int b : graph.out_neighbors(0)) rows.push_back(b);
  Matrix m = Matrix::Zero(n, n);
  RowEntry ra[2];
  RowEntry rb[2];
  for (int g = 0; g < n; ++g) {
    for (int b : rows) {
      const int a = group.add(b, g);
      for (const auto& o : pair_sender_law(graph, params, a, b)) {
        const int nb = row_entries(b, o.sender_b, q, rb);
        double vb0 = 0.0;
        for (int l = 0; l < nb; ++l) {
          if (rb[l].column == 0) vb0 += rb[l].value;
        }
        if (vb0 == 0.0) continue;
        const int na = row_entries(a, o.sender_a, q, ra);
        for (int k = 0; k < na; ++k) m(ra[k].column, g) += o.probability * ra[k].value * vb0;
      }
    }
  }
  return m;
}

Matrix msa_matrix_via_operator(const Graph& graph, const AlgoParams& params) {
  const CyclicGroup& group = require_cayley(graph).group;
  const int n = graph.node_count();
  const LyapunovOperator op(graph, params);
  Matrix m(n, n);
  for (int g = 0; g < n; ++g) {
    Vector e = Vector::Zero(n);
    e[g] = 1.0;
    const Matrix image = op.apply(cayley_matrix(GeneratingVector(group, e)));
    m.col(g) = generating_vector_of(image, group, 1e-10).entries;
  }
  return m;
}

Matrix msa_c_part(const Graph& graph, const AlgoParams& params) {
  require_cayley(graph);
  const int n = graph.node_count();
  const Matrix lap = graph.laplacian();
  const Matrix id = Matrix::Identity(n, n);
  if (params.algorithm() == Algorithm::kBGA) return id - (params.q() / n) * (lap + lap.transpose());
  const auto d = graph.regular_degree();
  if (!d) throw ValidationError("graph", "CBGA split needs a regular graph");
  const double c = params.q() * params.p() * std::pow(1.0 - params.p(), *d);
  return (id - c * lap.transpose()) * (id - c * lap);
}

MsaRecursion msa_ring_bga(int n, double q) {
  if (n < 5) throw ValidationError("n", "the BGA ring recursion needs N >= 5");
  MsaRecursion r;
  r.group = CyclicGroup({n});
  r.construction = "ring_bga";
  r.C = circulant(n, {{0, 1.0 - 4.0 * q / n}, {1, 2.0 * q / n}, {-1, 2.0 * q / n}});
  Matrix t = Matrix::Zero(n, n);
  t(0, 0) = 4.0;
  t(0, 2) = 1.0;
  t(0, n - 2) = 1.0;
  t(1, 0) = -2.0;
  t(1, 2) = -2.0;
  t(2, 2) = 1.0;
  t(n - 2, n - 2) = 1.0;
  t(n - 1, 0) = -2.0;
  t(n - 1, n - 2) = -2.0;
  r.T = (q * q / n) * t;
  return r;
}

MsaRecursion msa_ring_cbga(int n, double q, double p) {
  if (n < 9) throw ValidationError("n", "the CBGA ring recursion needs N >= 9");
  const double s = 1.0 - p;
  const double a = p * s * s;
  const double k1 = 2.0 * q * a * (1.0 - 2.0 * q * a);
  const double k2 = q * q * p * p * s * s * s * s;
  MsaRecursion r;
  r.group = CyclicGroup({n});
  r.construction = "ring_cbga";
  r.C = circulant(n, {{0, 1.0 - 2.0 * k1 - 2.0 * k2}, {1, k1}, {-1, k1}, {2, k2}, {-2, k2}});
  Matrix t = Matrix::Zero(n, n);
  const double s3 = s * s * s;
  const double mixed = 2.0 * (2.0 * p - 1.0) * s * s;
  t(0, 0) = 4.0 - 6.0 * a;
  t(0, 1) = 4.0 * a;
  t(0, 2) = s3;
  t(0, n - 2) = s3;
  t(0, n - 1) = 4.0 * a;

  t(1, 0) = 4.0 * a - 2.0;
  t(1, 1) = (1.0 - 6.0 * s * s) * p;
  t(1, 2) = mixed;
  t(1, n - 1) = -a;

  t(2, 0) = -a;
  t(2, 1) = 4.0 * a - 2.0 * p;
  t(2, 2) = s * (1.0 - 6.0 * p * s);

  t(3, 1) = (1.0 - s * s) * p;
  t(3, 2) = -2.0 * p * s * (2.0 * p - 1.0);

  t(4, 2) = p * p * s;
  t(n - 4, n - 2) = p * p * s;

  t(n - 3, n - 2) = -2.0 * p * s * (2.0 * p - 1.0);
  t(n - 3, n - 1) = (1.0 - s * s) * p;

  t(n - 2, 0) = -a;
  t(n - 2, n - 2) = s * (1.0 - 6.0 * p * s);
  t(n - 2, n - 1) = 4.0 * a - 2.0 * p;

  t(n - 1, 0) = 4.0 * a - 2.0;
  t(n - 1, 1) = -a;
  t(n - 1, n - 2) = mixed;
  t(n - 1, n - 1) = (1.0 - 6.0 * s * s) * p;
  r.T = (q * q * p * s * s) * t;
  return r;
}

MsaRecursion msa_recursion_cayley(const Graph& graph, const AlgoParams& params, MsaRoute route) {
  const CayleyStructure& cayley = require_cayley(graph);
  const int n = graph.node_count();
  const bool ring = is_ring(graph);
  const bool fast_ok = ring && (params.algorithm() == Algorithm::kBGA ? n >= 5 : n >= 9);
  if (route == MsaRoute::kAuto) route = fast_ok && n >= 9 ? MsaRoute::kRingFast : MsaRoute::kGeneric;
  if (route == MsaRoute::kRingFast) {
    if (!fast_ok) throw ValidationError("graph", "ring recursion needs a ring of sufficient size");
    return params.algorithm() == Algorithm::kBGA ? msa_ring_bga(n, params.q())
                                                 : msa_ring_cbga(n, params.q(), params.p());
  }
  MsaRecursion r;
  r.group = cayley.group;
  Matrix m;
  if (route == MsaRoute::kOperator) {
    m = msa_matrix_via_operator(graph, params);
    r.construction = "operator";
  } else {
    m = msa_matrix_generic(graph, params);
    r.construction = "generic";
  }
  if (params.algorithm() == Algorithm::kBGA || graph.regular_degree()) {
    r.C = msa_c_part(graph, params);
  } else {
    r.C = m;
  }
  r.T = m - r.C;
  return r;
}

namespace {

Vector normalized(const Vector& v) {
  const double s = v.sum();
  if (std::abs(s) < std::numeric_limits<double>::min()) throw ComputationError("invariant vector has zero sum");
  return v / s;
}

}  // namespace

Vector invariant_vector(const Matrix& m, const InvariantOptions& options) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n || n == 0) throw ValidationError("matrix", "matrix must be square and non-empty");
  switch (options.method) {
    case InvariantMethod::kEigen: {
      Eigen::EigenSolver<Matrix> es(m, true);
      if (es.info() != Eigen::Success) throw ComputationError("eigen-decomposition did not converge");
      const auto& ev = es.eigenvalues();
      int best = 0;
      for (int i = 1; i < n; ++i) {
        if (std::abs(ev[i] - 1.0) < std::abs(ev[best] - 1.0)) best = i;
      }
      if (std::abs(ev[best] - 1.0) >= options.unit_tolerance) {
        throw ComputationError("matrix has no eigenvalue within tolerance of 1");
      }
      for (int i = 0; i < n; ++i) {
        if (i != best && std::abs(ev[i] - 1.0) < options.unit_tolerance) {
          char buf[160];
          std::snprintf(buf, sizeof buf, "eigenvalue 1 is not simple: second unit eigenvalue %.12g%+.12gi",
                        ev[i].real(), ev[i].imag());
          throw ComputationError(buf);
        }
      }
      return normalized(es.eigenvectors().col(best).real());
    }
    case InvariantMethod::kLinearSolve: {
      Matrix a = m - Matrix::Identity(n, n);
      a.row(n - 1).setOnes();
      Vector rhs = Vector::Zero(n);
      rhs[n - 1] = 1.0;
      const Vector v = Eigen::PartialPivLU<Matrix>(a).solve(rhs);
      if (!v.allFinite()) throw ComputationError("singular system for the invariant vector");
      return v;
    }
    case InvariantMethod::kFixedPoint: {
      Vector v = Vector::Constant(n, 1.0 / n);
      Vector next(n);
      for (long long it = 0; it < options.max_iterations; ++it) {
        next.noalias() = m * v;
        next /= next.sum();
        const double change = (next - v).cwiseAbs().maxCoeff();
        v.swap(next);
        if (change < options.fixed_point_tolerance) return v;
      }
      throw ComputationError("fixed-point iteration for the invariant vector did not converge");
    }
  }
  throw ValidationError("method", "unknown invariant-vector method");
}

}  // namespace bgossip
