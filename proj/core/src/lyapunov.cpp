#include "bgossip/lyapunov.hpp"

#include <cmath>
#include <string>

namespace bgossip {

Matrix omega(int n) { return Matrix::Identity(n, n) - Matrix::Constant(n, n, 1.0 / n); }

Matrix mean_matrix(const Graph& graph, const AlgoParams& params) {
  const int n = graph.node_count();
  const Matrix lap = graph.laplacian();
  if (params.algorithm() == Algorithm::kBGA) return Matrix::Identity(n, n) - (params.q() / n) * lap;
  const double p = params.p();
  Vector scale(n);
  for (int i = 0; i < n; ++i) scale[i] = params.q() * p * std::pow(1.0 - p, graph.in_degree(i));
  return Matrix::Identity(n, n) - scale.asDiagonal() * lap;
}

LyapunovOperator::LyapunovOperator(const Graph& graph, const AlgoParams& params) : graph_(&graph), params_(params) {}

Matrix LyapunovOperator::apply(const Matrix& x) const {
  const int n = node_count();
  if (x.rows() != n || x.cols() != n) throw ValidationError("matrix", "operand must be N x N");
  const double q = params_.q();
  Matrix y = Matrix::Zero(n, n);
  RowEntry ra[2];
  RowEntry rb[2];
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      const double xab = x(a, b);
      if (xab == 0.0) continue;
      for (const auto& o : pair_sender_law(*graph_, params_, a, b)) {
        const int na = row_entries(a, o.sender_a, q, ra);
        const int nb = row_entries(b, o.sender_b, q, rb);
        const double w = xab * o.probability;
        for (int k = 0; k < na; ++k) {
          for (int l = 0; l < nb; ++l) y(ra[k].column, rb[l].column) += w * ra[k].value * rb[l].value;
        }
      }
    }
  }
  return y;
}

Matrix LyapunovOperator::kron_matrix(int max_nodes) const {
  const int n = node_count();
  if (n > max_nodes) {
    throw ValidationError("n", "dense N^2 x N^2 operator is capped at N=" + std::to_string(max_nodes));
  }
  const double q = params_.q();
  Matrix k = Matrix::Zero(n * n, n * n);
  RowEntry ra[2];
  RowEntry rb[2];
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      for (const auto& o : pair_sender_law(*graph_, params_, a, b)) {
        const int na = row_entries(a, o.sender_a, q, ra);
        const int nb = row_entries(b, o.sender_b, q, rb);
        for (int i = 0; i < na; ++i) {
          for (int j = 0; j < nb; ++j) {
            k(ra[i].column + n * rb[j].column, a + n * b) += o.probability * ra[i].value * rb[j].value;
          }
        }
      }
    }
  }
  return k;
}

Matrix lyap_apply_exact(const Graph& graph, const AlgoParams& params, const Matrix& x) {
  return LyapunovOperator(graph, params).apply(x);
}

Matrix lyap_apply_enumerated(const Graph& graph, const AlgoParams& params, const Matrix& x, int cap) {
  const int n = graph.node_count();
  if (x.rows() != n || x.cols() != n) throw ValidationError("matrix", "operand must be N x N");
  Matrix y = Matrix::Zero(n, n);
  for_each_realization(
      graph, params,
      [&](double w, const StepRealization& step) {
        const Matrix p = step.update_matrix();
        y.noalias() += w * (p.transpose() * x * p);
      },
      cap);
  return y;
}

Matrix mean_matrix_enumerated(const Graph& graph, const AlgoParams& params, int cap) {
  const int n = graph.node_count();
  Matrix y = Matrix::Zero(n, n);
  for_each_realization(
      graph, params, [&](double w, const StepRealization& step) { y += w * step.update_matrix(); }, cap);
  return y;
}

Vector cbga_ring_tau(int n, double p) {
  if (n < 9) throw ValidationError("n", "the CBGA ring form needs N >= 9");
  Vector tau = Vector::Zero(n);
  tau[0] = 2.0 * (p - 2.0);
  const double side[4] = {6.0 - 4.0 * p + p * p, -3.0 * (2.0 - 2.0 * p + p * p), 2.0 - 4.0 * p + 3.0 * p * p,
                          p * (1.0 - p)};
  for (int k = 1; k <= 4; ++k) {
    tau[k] = side[k - 1];
    tau[n - k] = side[k - 1];
  }
  return tau;
}

Matrix lyap_omega_closed_form(const Graph& graph, const AlgoParams& params, OmegaClosedForm form) {
  const int n = graph.node_count();
  const double q = params.q();
  if (form == OmegaClosedForm::kAuto) {
    form = params.algorithm() == Algorithm::kBGA ? OmegaClosedForm::kBgaGeneral : OmegaClosedForm::kCbgaRing;
  }
  const bool bga_form = form == OmegaClosedForm::kBgaGeneral || form == OmegaClosedForm::kBgaSymmetric;
  if (bga_form != (params.algorithm() == Algorithm::kBGA)) {
    throw ValidationError("algorithm", "closed form does not match the algorithm");
  }
  const Matrix lap = graph.laplacian();
  const Matrix om = omega(n);
  switch (form) {
    case OmegaClosedForm::kBgaGeneral: {
      const Matrix ones = Matrix::Ones(n, n);
      const Matrix a = graph.adjacency();
      const Matrix dplus = graph.out_degree_matrix();
      const Matrix lout = dplus - a;
      return om - (q * (1.0 - q) / n) * (lap + lap.transpose()) +
             (q / (double(n) * n)) * (lap.transpose() * ones + ones * lap) -
             (q * q / (double(n) * n)) * (lout * (dplus - a.transpose()));
    }
    case OmegaClosedForm::kBgaSymmetric: {
      if (!graph.is_symmetric()) throw ValidationError("graph", "the symmetric form needs a symmetric graph");
      return om - (2.0 * q * (1.0 - q) / n) * lap - (q * q / (double(n) * n)) * (lap * lap);
    }
    case OmegaClosedForm::kCbgaRing: {
      if (!is_ring(graph)) throw ValidationError("graph", "the CBGA closed form covers ring graphs only");
      const double p = params.p();
      const double k = p * (1.0 - p) * (1.0 - p);
      const Vector tau = cbga_ring_tau(n, p);
      Matrix circ(n, n);
      for (int h = 0; h < n; ++h) {
        for (int g = 0; g < n; ++g) circ(h, g) = tau[((h - g) % n + n) % n];
      }
      return om - (2.0 * q * (1.0 - q) * k) * lap - (q * q * k / n) * (lap * lap) -
             (q * q * p * p * (1.0 - p) * (1.0 - p) / n) * circ;
    }
    case OmegaClosedForm::kAuto:
      break;
  }
  throw ValidationError("form", "unsupported closed form");
}

MonteCarloMatrix lyap_apply_mc(const Graph& graph, const AlgoParams& params, const Matrix& x, long long trials,
                               const SeedPolicy& seed) {
  const int n = graph.node_count();
  if (trials < 1000) throw ValidationError("trials", "Monte Carlo estimate needs >= 1000 trials");
  if (x.rows() != n || x.cols() != n) throw ValidationError("matrix", "operand must be N x N");
  const double q = params.q();
  Rng rng = seed.trial_rng(0);
  Matrix sum = Matrix::Zero(n, n);
  Matrix sum_sq = Matrix::Zero(n, n);
  Matrix y(n, n);
  Matrix z(n, n);
  for (long long t = 0; t < trials; ++t) {
    const StepRealization step = sample_step(graph, params, rng);
    // y = X P, then z = P^T y, using P = I - q L(t) edge by edge.
    y = x;
    for (const auto& tx : step.transmissions()) {
      y.col(tx.receiver) -= q * x.col(tx.receiver);
      y.col(tx.sender) += q * x.col(tx.receiver);
    }
    z = y;
    for (const auto& tx : step.transmissions()) {
      z.row(tx.receiver) -= q * y.row(tx.receiver);
      z.row(tx.sender) += q * y.row(tx.receiver);
    }
    sum += z;
    sum_sq += z.cwiseProduct(z);
  }
  MonteCarloMatrix out;
  out.trials = trials;
  out.mean = sum / static_cast<double>(trials);
  const Matrix var = ((sum_sq - sum.cwiseProduct(out.mean)) / static_cast<double>(trials - 1)).cwiseMax(0.0);
  out.standard_error = (var / static_cast<double>(trials)).cwiseSqrt();
  return out;
}

}  // namespace bgossip
