#include "bgossip/analysis.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bgossip {

namespace {

template <typename E>
struct Named {
  E value;
  std::string_view name;
};

constexpr Named<RateMethod> kRateNames[] = {{RateMethod::kAuto, "auto"},
                                            {RateMethod::kClosedForm, "closed_form"},
                                            {RateMethod::kCayleyExact, "cayley_exact"},
                                            {RateMethod::kReachableSpaceExact, "reachable_space_exact"},
                                            {RateMethod::kBoundsOnly, "bounds_only"}};
constexpr Named<BiasMethod> kBiasNames[] = {{BiasMethod::kAuto, "auto"},       {BiasMethod::kNone, "none"},
                                            {BiasMethod::kClosedForm, "closed_form"},
                                            {BiasMethod::kCayley, "cayley"},   {BiasMethod::kIterative, "iterative"},
                                            {BiasMethod::kGeneral, "general"}};

template <typename E, std::size_t K>
std::string_view name_of(const Named<E> (&table)[K], E value) {
  for (const auto& entry : table) {
    if (entry.value == value) return entry.name;
  }
  return "unknown";
}

template <typename E, std::size_t K>
std::optional<E> parse_name(const Named<E> (&table)[K], std::string_view name) {
  for (const auto& entry : table) {
    if (entry.name == name) return entry.value;
  }
  return std::nullopt;
}

double complete_weight(int n, const AlgoParams& params) {
  if (params.algorithm() == Algorithm::kBGA) return 1.0;
  return n * params.p() * std::pow(1.0 - params.p(), n - 1);
}

/// Smallest nonzero Laplacian eigenvalue of a connected symmetric graph.
double algebraic_connectivity(const Graph& graph) {
  std::vector<double> ev;
  if (graph.cayley()) {
    const Matrix lap = graph.laplacian();
    for (const auto& z : circulant_eigenvalues(GeneratingVector(graph.cayley()->group, lap.col(0)))) {
      ev.push_back(z.real());
    }
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> es(graph.laplacian(), Eigen::EigenvaluesOnly);
    ev.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  }
  std::sort(ev.begin(), ev.end());
  return ev.size() > 1 ? ev[1] : 0.0;
}

void add_family_estimates(const Graph& graph, const AlgoParams& params, RateBounds& out) {
  const int n = graph.node_count();
  const double q = params.q();
  if (!graph.is_symmetric() || !graph.is_strongly_connected() || n < 2) return;
  const double lambda1 = algebraic_connectivity(graph);
  out.extras["lambda1"] = lambda1;
  if (params.algorithm() == Algorithm::kBGA) {
    out.extras["laplacian_lower"] = 1.0 - 2.0 * q * lambda1 / n;
    out.extras["laplacian_upper"] = 1.0 - 2.0 * q * (1.0 - q) * lambda1 / n;
  } else if (const auto d = graph.regular_degree()) {
    out.extras["regular_lower"] = 1.0 - 2.0 * q * params.p() * std::pow(1.0 - params.p(), *d) * lambda1;
  }
  if (!is_ring(graph)) return;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  if (params.algorithm() == Algorithm::kBGA) {
    const double c = 8.0 * pi2 / (double(n) * n * n);
    out.extras["ring_asymptotic_lower"] = 1.0 - q * c;
    out.extras["ring_asymptotic_upper"] = 1.0 - q * (1.0 - q) * c;
  } else {
    const double p = params.p();
    const double k = p * (1.0 - p) * (1.0 - p);
    const double c = 8.0 * pi2 / (double(n) * n);
    const double c_alt = 8.0 * std::numbers::pi / (double(n) * n);
    out.extras["ring_asymptotic_lower"] = 1.0 - q * k * c;
    out.extras["ring_asymptotic_upper"] = 1.0 - q * (1.0 - q) * k * c;
    out.extras["ring_asymptotic_lower_8pi"] = 1.0 - q * k * c_alt;
    out.extras["ring_asymptotic_upper_8pi"] = 1.0 - q * (1.0 - q) * k * c_alt;
    out.flags.push_back("ring asymptotic bounds use the constant 8*pi^2; the 8*pi variant is reported as *_8pi");
  }
}

void require_exact_size(const Graph& graph, int cap, const char* what) {
  if (graph.node_count() > cap) {
    throw ValidationError("n", std::string(what) + " is capped at N=" + std::to_string(cap));
  }
}

}  // namespace

std::string_view to_string(RateMethod method) { return name_of(kRateNames, method); }
std::string_view to_string(BiasMethod method) { return name_of(kBiasNames, method); }
std::optional<RateMethod> parse_rate_method(std::string_view name) { return parse_name(kRateNames, name); }
std::optional<BiasMethod> parse_bias_method(std::string_view name) { return parse_name(kBiasNames, name); }

RateBounds rate_bounds(const Graph& graph, const AlgoParams& params, const Matrix* msa) {
  const int n = graph.node_count();
  RateBounds out;
  if (graph.is_complete() && n >= 2) {
    const double w = complete_weight(n, params);
    const double q = params.q();
    out.lower = (1.0 - q * w) * (1.0 - q * w);
    // Omega is an eigenvector of L on the complete graph, so sr(L(Omega)) = R.
    out.upper = 1.0 - q * (2.0 - q) * w;
  } else if (graph.cayley()) {
    const CyclicGroup& group = graph.cayley()->group;
    const Matrix pbar = mean_matrix(graph, params);
    out.lower = std::pow(essential_spectral_radius(circulant_eigenvalues(GeneratingVector(group, pbar.col(0)))), 2);
    Matrix built;
    if (msa == nullptr) {
      built = msa_recursion_cayley(graph, params).M();
      msa = &built;
    }
    const Vector image = (*msa) * omega_vector(group).entries;
    out.upper = spectral_radius(circulant_eigenvalues(GeneratingVector(group, image)));
  } else {
    out.lower = std::pow(essential_spectral_radius(mean_matrix(graph, params)), 2);
    out.upper = spectral_radius_symmetric(lyap_apply_exact(graph, params, omega(n)));
  }
  add_family_estimates(graph, params, out);
  return out;
}

Vector expected_rho(const Graph& graph, const AlgoParams& params) {
  const int n = graph.node_count();
  Matrix a = mean_matrix(graph, params).transpose() - Matrix::Identity(n, n);
  a.row(n - 1).setOnes();
  Vector rhs = Vector::Zero(n);
  rhs[n - 1] = 1.0;
  const Vector v = Eigen::FullPivLU<Matrix>(a).solve(rhs);
  if (!v.allFinite() || (a * v - rhs).norm() > 1e-8) {
    throw ComputationError("mean matrix has no unique invariant distribution (graph not strongly connected?)");
  }
  return v;
}

Matrix expected_rho_outer(const Graph& graph, const AlgoParams& params, int cap) {
  require_exact_size(graph, cap, "the general bias method");
  const int n = graph.node_count();
  const int nn = n * n;
  Matrix k = LyapunovOperator(graph, params).kron_matrix(cap);
  k.diagonal().array() -= 1.0;
  k.row(0).setOnes();
  Vector rhs = Vector::Zero(nn);
  rhs[0] = 1.0;
  const Vector x = Eigen::PartialPivLU<Matrix>(k).solve(rhs);
  if (!x.allFinite() || (k * x - rhs).norm() > 1e-8) {
    throw ComputationError("second-moment operator has no unique fixed point (graph not strongly connected?)");
  }
  const Matrix out = Eigen::Map<const Matrix>(x.data(), n, n);
  return 0.5 * (out + out.transpose());
}

Matrix bias_matrix_general(const Graph& graph, const AlgoParams& params, int cap) {
  const int n = graph.node_count();
  const Matrix outer = expected_rho_outer(graph, params, cap);
  const Vector rho = expected_rho(graph, params);
  const Vector ones = Vector::Ones(n);
  return outer - (rho * ones.transpose() + ones * rho.transpose()) / n + Matrix::Constant(n, n, 1.0 / (double(n) * n));
}

Matrix bias_matrix_iterative(const Graph& graph, const AlgoParams& params, const IterativeBiasOptions& options) {
  const int n = graph.node_count();
  const Matrix pbar = mean_matrix(graph, params);
  if ((pbar.colwise().sum().array() - 1.0).abs().maxCoeff() > 1e-12) {
    throw ValidationError("method", "iterative bias needs a doubly stochastic mean matrix; use the general method");
  }
  const LyapunovOperator op(graph, params);
  Matrix delta = Matrix::Ones(n, n);
  for (long long it = 0; it < options.max_iterations; ++it) {
    Matrix next = op.apply(delta);
    const double change = (next - delta).cwiseAbs().maxCoeff();
    delta.swap(next);
    if (change < options.tolerance) {
      return (delta - Matrix::Ones(n, n)) / (double(n) * n);
    }
  }
  throw ComputationError("iterative bias did not converge within the iteration budget");
}

CompleteClosedForms complete_closed_forms(int n, const AlgoParams& params) {
  if (n < 2) throw ValidationError("n", "complete graph needs N >= 2");
  const double q = params.q();
  CompleteClosedForms out;
  out.weight = complete_weight(n, params);
  const double w = out.weight;
  out.rate = 1.0 - q * (2.0 - q) * w;
  out.trB = q / (2.0 - q) * (1.0 - 1.0 / n);
  out.B = (q / (2.0 - q) / n) * omega(n);
  out.reduced_operator << 1.0 - 2.0 * q * (1.0 - q) * w, q * q * w, 2.0 * q * (1.0 - q) * w, 1.0 - q * q * w;
  out.unit_eigenvector << q, 2.0 * (1.0 - q);
  out.unit_eigenvector /= out.unit_eigenvector.norm();
  return out;
}

namespace {

// Orthogonal projector onto {X = X^T : X 1 = 0}.
void project_zero_sum_symmetric(Matrix& y) {
  y = 0.5 * (y + y.transpose()).eval();
  const Vector r = y.rowwise().mean();
  const double m = r.mean();
  y.colwise() -= r;
  y.rowwise() -= r.transpose();
  y.array() += m;
}

}  // namespace

SpectralSummary analyze(const Graph& graph, const AlgoParams& params, const AnalyzeOptions& options) {
  const int n = graph.node_count();
  SpectralSummary s;
  s.n = n;
  s.params = params;
  const bool complete = graph.is_complete();
  const bool cayley = graph.cayley().has_value();

  RateMethod rm = options.rate_method;
  if (rm == RateMethod::kAuto) {
    rm = complete          ? RateMethod::kClosedForm
         : cayley          ? RateMethod::kCayleyExact
         : n <= options.exact_cap ? RateMethod::kReachableSpaceExact
                                  : RateMethod::kBoundsOnly;
  }
  BiasMethod bm = options.bias_method;
  if (bm == BiasMethod::kAuto) {
    bm = complete ? BiasMethod::kClosedForm
         : cayley ? BiasMethod::kCayley
         : n <= options.exact_cap ? BiasMethod::kGeneral
                                  : BiasMethod::kNone;
  }

  std::optional<MsaRecursion> msa;
  auto need_msa = [&]() -> const MsaRecursion& {
    if (!msa) msa = msa_recursion_cayley(graph, params, options.msa_route);
    return *msa;
  };

  s.method = rm;
  switch (rm) {
    case RateMethod::kClosedForm:
      if (!complete) throw ValidationError("rate_method", "closed forms cover complete graphs only");
      s.rate = complete_closed_forms(n, params).rate;
      break;
    case RateMethod::kCayleyExact:
      if (!cayley) throw ValidationError("rate_method", "cayley_exact needs a Cayley graph");
      s.rate = essential_spectral_radius(need_msa().M());
      break;
    case RateMethod::kReachableSpaceExact: {
      require_exact_size(graph, options.exact_cap, "the reachable-space method");
      const LyapunovOperator op(graph, params);
      // L maps T = {X = X^T : X 1 = 0} into itself, and on T it is dominated by
      // its action on Omega (-|X| Omega <= X <= |X| Omega, L positive), so the
      // spectral radius on T is the rate. Keeping the Krylov basis inside T
      // stops rounding from seeding modes outside it.
      const ReachableSpace space = reachable_space([&op](const Matrix& x) { return op.apply(x); }, omega(n), 1e-10,
                                                   4096, project_zero_sum_symmetric);
      s.rate = space.spectral_radius;
      s.reachable_dimension = space.dimension;
      break;
    }
    case RateMethod::kBoundsOnly:
    case RateMethod::kAuto:
      break;
  }

  if (options.compute_bounds) {
    const Matrix m = msa ? msa->M() : Matrix();
    RateBounds b = rate_bounds(graph, params, msa ? &m : nullptr);
    s.lower = b.lower;
    s.upper = b.upper;
    s.extras = std::move(b.extras);
    s.discrepancy_flags = std::move(b.flags);
  }

  s.bias_method = bm;
  switch (bm) {
    case BiasMethod::kClosedForm: {
      if (!complete) throw ValidationError("bias_method", "closed forms cover complete graphs only");
      CompleteClosedForms cf = complete_closed_forms(n, params);
      s.trB = cf.trB;
      if (options.full_bias_matrix) s.B = std::move(cf.B);
      break;
    }
    case BiasMethod::kCayley: {
      if (!cayley) throw ValidationError("bias_method", "the Cayley bias method needs a Cayley graph");
      InvariantOptions io;
      io.method = options.invariant_method;
      s.invariant_vector = invariant_vector(need_msa().M(), io);
      s.trB = s.invariant_vector[0] - 1.0 / n;
      if (options.full_bias_matrix) {
        Vector shifted = s.invariant_vector.array() - 1.0 / n;
        s.B = cayley_matrix(GeneratingVector(graph.cayley()->group, shifted)) / n;
      }
      break;
    }
    case BiasMethod::kIterative: {
      Matrix b = bias_matrix_iterative(graph, params);
      s.trB = b.trace();
      if (options.full_bias_matrix) s.B = std::move(b);
      break;
    }
    case BiasMethod::kGeneral: {
      Matrix b = bias_matrix_general(graph, params, options.exact_cap);
      s.trB = b.trace();
      if (options.full_bias_matrix) s.B = std::move(b);
      break;
    }
    case BiasMethod::kNone:
    case BiasMethod::kAuto:
      break;
  }

  if (msa && params.algorithm() == Algorithm::kBGA && msa->construction != "ring_bga") {
    s.discrepancy_flags.push_back("BGA Cayley split uses C = I - (q/N)(L + L^T)");
  }
  return s;
}

SpectralSummary rate(const Graph& graph, const AlgoParams& params, RateMethod method) {
  AnalyzeOptions o;
  o.rate_method = method;
  o.bias_method = BiasMethod::kNone;
  return analyze(graph, params, o);
}

SpectralSummary bias(const Graph& graph, const AlgoParams& params, BiasMethod method, bool full_matrix) {
  AnalyzeOptions o;
  o.rate_method = RateMethod::kBoundsOnly;
  o.compute_bounds = false;
  o.bias_method = method;
  o.full_bias_matrix = full_matrix;
  return analyze(graph, params, o);
}

}  // namespace bgossip
