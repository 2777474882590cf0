#include "verify.hpp"

#include "bgossip/analysis.hpp"
#include "bgossip/io.hpp"

#include <cmath>

namespace bgossip::cli {

namespace {

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

CheckResult check(std::string name, bool ok, std::string detail) { return {std::move(name), ok, std::move(detail)}; }

CheckResult tolerance_check(std::string name, double err, double tol) {
  return check(std::move(name), err <= tol, "max error " + format_number(err) + " (tol " + format_number(tol) + ")");
}

CheckResult step_invariants(const Graph& graph, const AlgoParams& params, const VerifyOptions& o) {
  const int n = graph.node_count();
  const double q = params.q();
  Rng rng = SeedPolicy(o.seed).trial_rng(0);
  for (long long s = 0; s < o.samples; ++s) {
    const StepRealization step = sample_step(graph, params, rng);
    const Matrix p = step.update_matrix();
    const Matrix expected = Matrix::Identity(n, n) - q * step.realized_laplacian();
    if (max_abs(p - expected) > 1e-15) return check("step_invariants", false, "P != I - q L(t)");
    if (max_abs(p.rowwise().sum() - Vector::Ones(n)) > 1e-12) return check("step_invariants", false, "row sum != 1");
    for (int i = 0; i < n; ++i) {
      if (p(i, i) < 1.0 - q - 1e-15) return check("step_invariants", false, "diagonal below 1-q");
      for (int j = 0; j < n; ++j) {
        if (i != j && p(i, j) != 0.0 && p(i, j) != q) return check("step_invariants", false, "off-diagonal not in {0,q}");
      }
    }
    if (params.algorithm() == Algorithm::kBGA) {
      if (step.active_set().size() != 1) return check("step_invariants", false, "BGA needs one broadcaster");
      const int v = step.active_set()[0];
      const auto nb = graph.out_neighbors(v);
      if (step.receiver_set() != std::vector<int>(nb.begin(), nb.end())) {
        return check("step_invariants", false, "BGA receivers differ from out-neighbors");
      }
    } else {
      std::vector<char> active(n, 0);
      for (int v : step.active_set()) active[v] = 1;
      for (const auto& t : step.transmissions()) {
        if (active[t.receiver]) return check("step_invariants", false, "an active node received");
        int heard = 0;
        for (int v : graph.in_neighbors(t.receiver)) heard += active[v];
        if (heard != 1 || !active[t.sender]) return check("step_invariants", false, "receiver without a unique sender");
      }
    }
  }
  return check("step_invariants", true, std::to_string(o.samples) + " sampled steps");
}

}  // namespace

std::vector<CheckResult> run_verification(const Graph& graph, const AlgoParams& params, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const int n = graph.node_count();
  const bool enumerable = params.algorithm() == Algorithm::kBGA ? n <= 400 : n <= o.enumeration_cap;
  out.push_back(step_invariants(graph, params, o));

  if (enumerable) {
    out.push_back(tolerance_check("mean_matrix_vs_enumeration",
                                  max_abs(mean_matrix(graph, params) - mean_matrix_enumerated(graph, params, o.enumeration_cap)),
                                  1e-12));
    const Matrix om = omega(n);
    const Matrix exact = lyap_apply_exact(graph, params, om);
    out.push_back(tolerance_check("lyapunov_vs_enumeration",
                                  max_abs(exact - lyap_apply_enumerated(graph, params, om, o.enumeration_cap)), 1e-12));
  }
  const bool closed_ok = params.algorithm() == Algorithm::kBGA || (is_ring(graph) && n >= 9);
  if (closed_ok && n <= 400) {
    const Matrix om = omega(n);
    out.push_back(tolerance_check("omega_closed_form",
                                  max_abs(lyap_omega_closed_form(graph, params) - lyap_apply_exact(graph, params, om)),
                                  1e-12));
  }

  const SpectralSummary s = analyze(graph, params);
  if (s.rate) {
    const bool ok = s.lower <= *s.rate + 1e-10 && *s.rate <= s.upper + 1e-10;
    out.push_back(check("bound_sandwich", ok,
                        format_number(s.lower) + " <= " + format_number(*s.rate) + " <= " + format_number(s.upper)));
  }
  if (s.trB) out.push_back(check("trB_nonnegative", *s.trB >= -1e-10, "trB = " + format_number(*s.trB)));

  if (graph.cayley() && !graph.is_complete()) {
    const Matrix m = msa_matrix_generic(graph, params);
    out.push_back(tolerance_check("msa_column_sums", max_abs(m.colwise().sum().transpose() - Vector::Ones(n)), 1e-13));
    if (n <= 60) {
      out.push_back(tolerance_check("msa_generic_vs_operator", max_abs(m - msa_matrix_via_operator(graph, params)), 1e-12));
    }
    const bool fast = is_ring(graph) && n >= 9;
    if (fast) {
      out.push_back(tolerance_check("msa_ring_fast_path",
                                    max_abs(m - msa_recursion_cayley(graph, params, MsaRoute::kRingFast).M()), 1e-12));
    }
    if (n <= 30) {
      const LyapunovOperator op(graph, params);
      Matrix delta = Matrix::Constant(n, n, 1.0 / n);
      Vector pi = Vector::Constant(n, 1.0 / n);
      double err = 0.0;
      for (int t = 1; t <= 20; ++t) {
        delta = op.apply(delta);
        pi = m * pi;
        err = std::max(err, (delta.col(0) - pi).cwiseAbs().maxCoeff());
      }
      out.push_back(tolerance_check("msa_recursion_consistency", err, 1e-12));
    }
    const Graph gm = graph_of_matrix(m.transpose());
    const Matrix a = graph.adjacency();
    const Graph upper = graph_of_matrix(a + a.transpose() + a.transpose() * a);
    out.push_back(check("support_inclusions", subgraph_of(graph, gm) && subgraph_of(gm, upper),
                        "G_A <= G_{M^T} <= G_{A + A^T + A^T A}"));
    InvariantOptions io;
    const Vector e = invariant_vector(m, io);
    io.method = InvariantMethod::kLinearSolve;
    const Vector l = invariant_vector(m, io);
    io.method = InvariantMethod::kFixedPoint;
    const Vector f = invariant_vector(m, io);
    out.push_back(tolerance_check("invariant_vector_paths",
                                  std::max((e - l).cwiseAbs().maxCoeff(), (e - f).cwiseAbs().maxCoeff()), 1e-10));
    if (n <= 20) {
      const double general = bias_matrix_general(graph, params).trace();
      out.push_back(tolerance_check("bias_cayley_vs_general", std::abs(general - (e[0] - 1.0 / n)), 1e-10));
    }
  }
  return out;
}

}  // namespace bgossip::cli
