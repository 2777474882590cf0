#include "bgossip/experiments.hpp"

#include "bgossip/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bgossip {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kComplete: return "complete";
    case FamilyKind::kRing: return "ring";
    case FamilyKind::kTorus: return "torus";
    case FamilyKind::kLattice: return "lattice";
  }
  return "unknown";
}

std::string_view to_string(DemocracyVerdict verdict) {
  switch (verdict) {
    case DemocracyVerdict::kVanishing: return "vanishing";
    case DemocracyVerdict::kNonVanishing: return "non-vanishing";
    case DemocracyVerdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

Graph FamilySpec::build(int size) const {
  switch (kind) {
    case FamilyKind::kComplete: {
      const int s[] = {size};
      return build_named_graph(NamedFamily::kComplete, s);
    }
    case FamilyKind::kRing: {
      const int s[] = {size};
      return build_named_graph(NamedFamily::kRing, s);
    }
    case FamilyKind::kTorus: {
      if (dimension < 1) throw ValidationError("dimension", "torus dimension must be >= 1");
      const std::vector<int> s(dimension, size);
      return build_named_graph(NamedFamily::kTorus, s);
    }
    case FamilyKind::kLattice:
      return build_lattice_cayley(generators, size);
  }
  throw ValidationError("family", "unknown family");
}

std::string FamilySpec::describe() const {
  std::string out(to_string(kind));
  if (kind == FamilyKind::kTorus) out += "^" + std::to_string(dimension);
  if (kind == FamilyKind::kLattice) {
    out += "{";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (i) out += "|";
      for (std::size_t j = 0; j < generators[i].size(); ++j) {
        if (j) out += ",";
        out += std::to_string(generators[i][j]);
      }
    }
    out += "}";
  }
  return out;
}

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw ValidationError("fit", "x and y lengths differ");
  if (x.size() < 2) throw ValidationError("fit", "a fit needs at least two points");
  const std::size_t n = x.size();
  std::vector<double> lx(n);
  std::vector<double> ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw ValidationError("fit", "log-log fit needs positive values");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw ValidationError("fit", "x values are all equal");
  LogLogFit fit;
  fit.points = static_cast<int>(n);
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    sse += r * r;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - sse / syy : 1.0;
  fit.slope_se = n > 2 ? std::sqrt(sse / (n - 2) / sxx) : 0.0;
  return fit;
}

namespace {

void check_grid(const char* field, const std::vector<double>& grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0 && grid[i] < 1.0)) throw ValidationError(field, "grid values must lie in (0, 1)");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw ValidationError(field, "grid must be strictly increasing");
  }
}

struct ExactPoint {
  double rate;
  double trB;
  double pi0;
  std::optional<double> esr_c;
};

ExactPoint exact_point(const Graph& graph, const AlgoParams& params, bool want_esr_c) {
  const int n = graph.node_count();
  if (graph.is_complete()) {
    const CompleteClosedForms cf = complete_closed_forms(n, params);
    return {cf.rate, cf.trB, cf.trB + 1.0 / n, std::nullopt};
  }
  const MsaRecursion msa = msa_recursion_cayley(graph, params);
  const Matrix m = msa.M();
  InvariantOptions io;
  io.method = InvariantMethod::kLinearSolve;
  const Vector pi = invariant_vector(m, io);
  ExactPoint out{essential_spectral_radius(m), pi[0] - 1.0 / n, pi[0], std::nullopt};
  if (want_esr_c) {
    out.esr_c = essential_spectral_radius(circulant_eigenvalues(GeneratingVector(msa.group, msa.C.col(0))));
  }
  return out;
}

}  // namespace

SweepResult sweep_tradeoff(const Graph& graph, std::string descriptor, Algorithm algorithm,
                           const std::vector<double>& q_grid, const std::vector<double>& p_grid, int workers) {
  check_grid("q_grid", q_grid);
  if (q_grid.empty()) throw ValidationError("q_grid", "grid is empty");
  if (algorithm == Algorithm::kCBGA) {
    check_grid("p_grid", p_grid);
    if (p_grid.empty()) throw ValidationError("p_grid", "CBGA sweep needs a p grid");
  } else if (!p_grid.empty()) {
    throw ValidationError("p_grid", "BGA takes no p grid");
  }
  SweepResult out;
  out.graph = std::move(descriptor);
  out.algorithm = algorithm;
  out.q_grid = q_grid;
  out.p_grid = p_grid;
  const std::size_t np = algorithm == Algorithm::kCBGA ? p_grid.size() : 1;
  out.points.resize(q_grid.size() * np);
  parallel_for(out.points.size(), workers, [&](std::size_t idx) {
    const double q = q_grid[idx / np];
    SweepPoint& pt = out.points[idx];
    pt.q = q;
    AlgoParams params = AlgoParams::bga(q);
    if (algorithm == Algorithm::kCBGA) {
      pt.p = p_grid[idx % np];
      params = AlgoParams::cbga(q, *pt.p);
    }
    pt.summary = analyze(graph, params);
  });
  for (std::size_t j = 0; j < np; ++j) {
    for (std::size_t i = 1; i < q_grid.size(); ++i) {
      const SpectralSummary& prev = out.points[(i - 1) * np + j].summary;
      const SpectralSummary& cur = out.points[i * np + j].summary;
      if (prev.rate && cur.rate && !(*cur.rate < *prev.rate)) out.pareto.rate_decreasing = false;
      if (prev.trB && cur.trB && !(*cur.trB > *prev.trB)) out.pareto.trB_increasing = false;
    }
  }
  return out;
}

ScalingResult scaling_study(const FamilySpec& family, const AlgoParams& params, const std::vector<int>& sizes,
                            const ScalingOptions& options) {
  if (sizes.size() < 2) throw ValidationError("sizes", "a scaling study needs at least two sizes");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw ValidationError("sizes", "sizes must be strictly increasing");
  }
  ScalingResult out;
  out.family = family;
  out.params = params;
  out.rows.resize(sizes.size());
  parallel_for(sizes.size(), options.workers, [&](std::size_t i) {
    const Graph g = family.build(sizes[i]);
    const ExactPoint pt = exact_point(g, params, true);
    out.rows[i] = {sizes[i], g.node_count(), pt.rate, 1.0 - pt.rate, pt.trB, pt.pi0, pt.esr_c};
  });
  out.fit_start = options.fit_start.value_or(upper_half_start(sizes.size()));
  if (out.fit_start + 2 > sizes.size()) throw ValidationError("fit_start", "fewer than two rows left to fit");
  std::vector<double> n;
  std::vector<double> gap;
  std::vector<double> tr;
  for (std::size_t i = out.fit_start; i < out.rows.size(); ++i) {
    n.push_back(out.rows[i].n);
    gap.push_back(out.rows[i].one_minus_rate);
    tr.push_back(out.rows[i].trB);
  }
  out.rate_fit = fit_loglog(n, gap);
  out.trB_fit = fit_loglog(n, tr);
  return out;
}

McBias mc_bias_estimate(const Graph& graph, const AlgoParams& params, long long trials, const SeedPolicy& seed,
                        const StopRule& stop, int workers) {
  if (trials < 100) throw ValidationError("trials", "at least 100 trials are required");
  const int n = graph.node_count();
  std::vector<double> beta(trials);
  std::vector<char> capped(trials, 0);
  parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t t) {
    Rng rng = seed.trial_rng(t);
    std::vector<double> x(n);
    for (double& v : x) v = standard_normal(rng);
    const ConsensusOutcome res = run_to_consensus(graph, params, x, rng, stop);
    beta[t] = res.beta;
    capped[t] = res.stop_reason == StopReason::kMaxSteps;
  });
  McBias out;
  out.runs = trials;
  double sum = 0.0;
  for (double b : beta) sum += b;
  out.mean_beta = sum / trials;
  double ss = 0.0;
  for (double b : beta) ss += (b - out.mean_beta) * (b - out.mean_beta);
  out.standard_error = std::sqrt(ss / (trials - 1) / trials);
  for (char c : capped) out.max_steps_hits += c;
  return out;
}

RggBiasResult rgg_bias_experiment(const RggBiasOptions& options) {
  if (options.runs < 30) throw ValidationError("runs", "at least 30 runs per point are required");
  if (options.sizes.size() < 2) throw ValidationError("sizes", "need at least two sizes");
  RggBiasResult out;
  out.points.resize(options.sizes.size());
  for (std::size_t i = 0; i < options.sizes.size(); ++i) {
    const int n = options.sizes[i];
    const double radius = options.radius_factor * std::sqrt(std::log(static_cast<double>(n)) / n);
    const SeedPolicy point_seed = options.seed.child(static_cast<std::uint64_t>(n));
    std::vector<double> beta(options.runs);
    std::vector<int> discarded(options.runs);
    std::vector<double> degree(options.runs);
    std::vector<char> capped(options.runs, 0);
    parallel_for(static_cast<std::size_t>(options.runs), options.workers, [&](std::size_t r) {
      const RggSample sample = build_rgg(n, radius, point_seed.trial_seed(2 * r), true);
      Rng rng = point_seed.trial_rng(2 * r + 1);
      std::vector<double> x(n);
      for (double& v : x) v = standard_normal(rng);
      const ConsensusOutcome res = run_to_consensus(sample.graph, options.params, x, rng, options.stop);
      beta[r] = res.beta;
      discarded[r] = sample.discarded;
      degree[r] = sample.mean_degree();
      capped[r] = res.stop_reason == StopReason::kMaxSteps;
    });
    RggBiasPoint& pt = out.points[i];
    pt.n = n;
    pt.radius = radius;
    pt.bias.runs = options.runs;
    double sum = 0.0;
    for (double b : beta) sum += b;
    pt.bias.mean_beta = sum / options.runs;
    double ss = 0.0;
    for (double b : beta) ss += (b - pt.bias.mean_beta) * (b - pt.bias.mean_beta);
    pt.bias.standard_error = std::sqrt(ss / (options.runs - 1) / options.runs);
    for (long long r = 0; r < options.runs; ++r) {
      pt.discarded += discarded[r];
      pt.mean_degree += degree[r] / options.runs;
      pt.bias.max_steps_hits += capped[r];
    }
    pt.complete_trB = complete_closed_forms(n, options.params).trB;
    pt.ring_trB = exact_point(FamilySpec{FamilyKind::kRing, 1, {}}.build(n), options.params, false).trB;
  }
  std::vector<double> ns;
  std::vector<double> rgg;
  std::vector<double> complete;
  std::vector<double> ring;
  for (const auto& pt : out.points) {
    ns.push_back(pt.n);
    rgg.push_back(pt.bias.mean_beta);
    complete.push_back(pt.complete_trB);
    ring.push_back(pt.ring_trB);
  }
  out.rgg_fit = fit_loglog(ns, rgg);
  out.complete_fit = fit_loglog(ns, complete);
  out.ring_fit = fit_loglog(ns, ring);
  return out;
}

OptimalPResult optimal_p_search(const Graph& graph, double q, const std::vector<double>& p_grid, int workers) {
  check_grid("p_grid", p_grid);
  if (p_grid.size() < 2) throw ValidationError("p_grid", "need at least two grid points");
  const auto d = graph.regular_degree();
  if (!d) throw ValidationError("graph", "optimal-p search needs a regular graph");
  OptimalPResult out;
  out.p_grid = p_grid;
  out.rates.resize(p_grid.size());
  parallel_for(p_grid.size(), workers, [&](std::size_t i) {
    AnalyzeOptions o;
    o.bias_method = BiasMethod::kNone;
    o.compute_bounds = false;
    const SpectralSummary s = analyze(graph, AlgoParams::cbga(q, p_grid[i]), o);
    if (!s.rate) throw ComputationError("no exact rate available for this graph");
    out.rates[i] = *s.rate;
  });
  const auto best = static_cast<std::size_t>(std::min_element(out.rates.begin(), out.rates.end()) - out.rates.begin());
  out.argmin_p = p_grid[best];
  out.min_rate = out.rates[best];
  out.theoretical_p = 1.0 / (*d + 1);
  out.distance = std::abs(out.argmin_p - out.theoretical_p);
  if (best > 0) out.grid_step = std::max(out.grid_step, p_grid[best] - p_grid[best - 1]);
  if (best + 1 < p_grid.size()) out.grid_step = std::max(out.grid_step, p_grid[best + 1] - p_grid[best]);

  const RateBounds rb = rate_bounds(graph, AlgoParams::cbga(q, p_grid[best]));
  const auto lam = rb.extras.find("lambda1");
  if (lam != rb.extras.end()) {
    out.lower_bound_curve.reserve(p_grid.size());
    for (double p : p_grid) out.lower_bound_curve.push_back(1.0 - 2.0 * q * p * std::pow(1.0 - p, *d) * lam->second);
    const auto lb = std::min_element(out.lower_bound_curve.begin(), out.lower_bound_curve.end());
    out.lower_bound_argmin_p = p_grid[lb - out.lower_bound_curve.begin()];
  }
  return out;
}

DemocracyResult weak_democracy_check(const FamilySpec& family, const AlgoParams& params, const std::vector<int>& sizes,
                                     int workers) {
  if (sizes.size() < 2) throw ValidationError("sizes", "need at least two sizes");
  DemocracyResult out;
  out.family = family;
  out.rows.resize(sizes.size());
  parallel_for(sizes.size(), workers, [&](std::size_t i) {
    const Graph g = family.build(sizes[i]);
    const ExactPoint pt = exact_point(g, params, false);
    out.rows[i] = {sizes[i], g.node_count(), pt.pi0, pt.trB};
  });
  std::vector<double> n;
  std::vector<double> pi0;
  std::vector<double> tr;
  for (const auto& r : out.rows) {
    n.push_back(r.n);
    pi0.push_back(r.pi0);
    tr.push_back(r.trB);
  }
  out.pi0_fit = fit_loglog(n, pi0);
  out.trB_fit = fit_loglog(n, tr);
  if (family.kind == FamilyKind::kComplete) out.limit = params.q() / (2.0 - params.q());
  const DemocracyRow& first = out.rows.front();
  const DemocracyRow& last = out.rows.back();
  const DemocracyRow& before = out.rows[out.rows.size() - 2];
  if (out.pi0_fit.slope < 0.0 && out.trB_fit.slope < 0.0 && last.pi0 < first.pi0 / 4.0) {
    out.verdict = DemocracyVerdict::kVanishing;
  } else if (last.trB > 0.0 && last.trB >= first.trB / 4.0 && std::abs(last.trB - before.trB) < 0.05 * last.trB) {
    out.verdict = DemocracyVerdict::kNonVanishing;
  }
  return out;
}

}  // namespace bgossip
