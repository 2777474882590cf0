#include "cli.hpp"

#include "graph_spec.hpp"
#include "svg.hpp"
#include "verify.hpp"

#include "bgossip/bgossip.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>

#ifndef BGOSSIP_VERSION
#define BGOSSIP_VERSION "0.0.0"
#endif

namespace bgossip::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Handler = std::function<int()>;

std::string fmt(double v) { return format_number(v); }
std::string fmt(const std::optional<double>& v) { return v ? format_number(*v) : "nan"; }

struct Common {
  std::string out_dir;
  int workers = 0;
  std::uint64_t seed = 1;
  bool no_svg = false;
};

struct AlgoOptions {
  std::string algo = "bga";
  double q = 0.5;
  double p = std::nan("");
};

AlgoParams make_params(const AlgoOptions& o) {
  const auto a = parse_algorithm(o.algo);
  if (!a) throw ValidationError("algo", "unknown algorithm '" + o.algo + "' (expected bga or cbga)");
  if (*a == Algorithm::kBGA) {
    if (!std::isnan(o.p)) throw ValidationError("p", "BGA takes no wake probability");
    return AlgoParams::bga(o.q);
  }
  if (std::isnan(o.p)) throw ValidationError("p", "CBGA needs --p");
  return AlgoParams::cbga(o.q, o.p);
}

struct FamilyOptions {
  std::string family = "ring";
  int dimension = 2;
  std::string generators;
};

FamilySpec make_family(const FamilyOptions& o) {
  FamilySpec f;
  if (o.family == "ring") {
    f.kind = FamilyKind::kRing;
  } else if (o.family == "complete") {
    f.kind = FamilyKind::kComplete;
  } else if (o.family == "torus") {
    f.kind = FamilyKind::kTorus;
    f.dimension = o.dimension;
  } else if (o.family == "lattice") {
    f.kind = FamilyKind::kLattice;
    if (o.generators.empty()) throw ValidationError("generators", "lattice family needs --generators");
    std::string rest = o.generators;
    std::size_t start = 0;
    while (start <= rest.size()) {
      const std::size_t bar = rest.find('|', start);
      const std::string g = rest.substr(start, bar - start);
      std::vector<int> coords;
      for (double c : parse_real_list(g, "generators")) coords.push_back(static_cast<int>(std::lround(c)));
      f.generators.push_back(coords);
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
  } else {
    throw ValidationError("family", "unknown family '" + o.family + "'");
  }
  return f;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out_dir, "Output directory (default: $BGOSSIP_OUT_DIR or ./bgossip-out)");
  sub->add_option("--workers", c.workers, "Worker threads (0 = hardware concurrency)")->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", c.seed, "Master seed");
  sub->add_flag("--no-svg", c.no_svg, "Skip SVG plots");
}

void add_algo(CLI::App* sub, AlgoOptions& a) {
  sub->add_option("--algo", a.algo, "bga or cbga");
  sub->add_option("--q", a.q, "Mixing weight in (0, 1)");
  sub->add_option("--p", a.p, "Wake probability in (0, 1), CBGA only");
}

fs::path resolve_out(const Common& c) {
  if (!c.out_dir.empty()) return c.out_dir;
  if (const char* env = std::getenv("BGOSSIP_OUT_DIR"); env && *env) return env;
  return "bgossip-out";
}

void write_manifest(const fs::path& dir, const std::vector<std::string>& args, const Common& c) {
  std::vector<std::string> argv = args;
  bool has_out = false;
  for (const auto& a : argv) has_out = has_out || a == "--out" || a.rfind("--out=", 0) == 0;
  if (!has_out) {
    argv.push_back("--out");
    argv.push_back(dir.string());
  }
  const json m{{"tool", "bgossip"},
               {"version", BGOSSIP_VERSION},
               {"argv", argv},
               {"seed", c.seed},
               {"rng", std::string(kRngAlgorithm)}};
  write_text(dir / "manifest.json", m.dump(2) + "\n");
}

void maybe_svg(const Common& c, const fs::path& path, const PlotSpec& spec, const std::vector<Series>& series) {
  if (!c.no_svg) write_text(path, render_svg(spec, series));
}

std::vector<double> x0_for(const std::string& kind, int n, std::uint64_t seed) {
  std::vector<double> x(n);
  Rng rng = SeedPolicy(seed).trial_rng(0);
  if (kind == "random-normal") {
    for (double& v : x) v = standard_normal(rng);
  } else if (kind == "random-uniform") {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double& v : x) v = u(rng);
  } else if (kind == "e0") {
    x[0] = 1.0;
  } else {
    const auto vals = parse_real_list(kind, "x0");
    if (static_cast<int>(vals.size()) != n) throw ValidationError("x0", "list length differs from N");
    x = vals;
  }
  return x;
}

int load_manifest_and_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.size() < 2) throw ValidationError("from-manifest", "expected a manifest path");
  json m;
  try {
    m = json::parse(read_text(args[1]));
  } catch (const json::parse_error& e) {
    throw ValidationError("from-manifest", std::string("malformed manifest: ") + e.what());
  }
  if (!m.contains("argv") || !m["argv"].is_array()) throw ValidationError("from-manifest", "manifest lacks argv");
  std::vector<std::string> argv = m["argv"].get<std::vector<std::string>>();
  for (std::size_t i = 2; i + 1 < args.size(); i += 2) {
    if (args[i] != "--out") throw ValidationError("from-manifest", "only --out may override a manifest");
    for (std::size_t k = 0; k + 1 < argv.size(); ++k) {
      if (argv[k] == "--out") argv[k + 1] = args[i + 1];
    }
  }
  return run_cli(argv, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (!args.empty() && args[0] == "--from-manifest") return load_manifest_and_run(args, out, err);

    CLI::App app{"Broadcast gossip simulation and mean-square analysis", "bgossip"};
    app.require_subcommand(1);
    app.set_version_flag("--version", BGOSSIP_VERSION);
    Common common;
    AlgoOptions algo;
    std::string graph_spec;
    Handler handler;

    // graph
    std::string export_path;
    auto* g = app.add_subcommand("graph", "Build and inspect a graph, export it as JSON");
    g->add_option("--graph", graph_spec, "Graph spec")->required();
    g->add_option("--export", export_path, "Also write the graph JSON here");
    add_common(g, common);
    g->callback([&] {
      handler = [&] {
        const Graph gr = parse_graph_spec(graph_spec, common.seed);
        const fs::path dir = resolve_out(common);
        save_graph(dir / "graph.json", gr);
        if (!export_path.empty()) save_graph(export_path, gr);
        char hash[32];
        std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(gr.hash()));
        out << "n=" << gr.node_count() << " edges=" << gr.edge_count() << " symmetric=" << gr.is_symmetric()
            << " strongly_connected=" << gr.is_strongly_connected() << " cayley=" << gr.cayley().has_value();
        if (gr.cayley()) {
          out << " generates_group=" << gr.cayley()->generates_group
              << " inverse_closed=" << gr.cayley()->inverse_closed;
        }
        out << " hash=" << hash << "\n";
        return kExitOk;
      };
    });

    // simulate
    std::string x0_kind = "random-normal";
    std::string record = "metrics";
    StopRule stop;
    auto* sim = app.add_subcommand("simulate", "Run one trajectory and dump per-step metrics");
    sim->add_option("--graph", graph_spec, "Graph spec")->required();
    add_algo(sim, algo);
    add_common(sim, common);
    sim->add_option("--x0", x0_kind, "random-normal, random-uniform, e0, or a comma list");
    sim->add_option("--record", record, "metrics or full")->check(CLI::IsMember({"metrics", "full"}));
    sim->add_option("--tol", stop.tol, "Consensus tolerance on max - min");
    sim->add_option("--max-steps", stop.max_steps, "Step budget");
    sim->callback([&] {
      handler = [&] {
        const Graph gr = parse_graph_spec(graph_spec, common.seed);
        const AlgoParams params = make_params(algo);
        const auto x0 = x0_for(x0_kind, gr.node_count(), common.seed);
        const RecordMode mode = record == "full" ? RecordMode::kFull : RecordMode::kMetricsOnly;
        const std::uint64_t traj_seed = SeedPolicy(common.seed).trial_seed(1);
        const TrajectoryRecord rec = run_trajectory(gr, params, x0, stop, traj_seed, mode);
        const fs::path dir = resolve_out(common);
        write_trajectory(dir / "trajectory.csv", rec, {gr.hash(), params, common.seed, stop, mode});
        if (!common.no_svg) {
          std::vector<double> t(rec.dispersion.size());
          for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<double>(i);
          maybe_svg(common, dir / "dispersion.svg", {"Dispersion d(t)", "t", "d(t)", false, true},
                    {{"d(t)", t, rec.dispersion}});
        }
        out << "steps=" << rec.steps << " stop=" << to_string(rec.stop_reason) << " x_ave=" << fmt(rec.averages.back())
            << " beta=" << fmt(rec.bias.back()) << "\n";
        return kExitOk;
      };
    });

    // analyze
    std::string rate_method = "auto";
    std::string bias_method = "auto";
    bool full_b = false;
    auto* an = app.add_subcommand("analyze", "Rate, bounds and bias for one configuration");
    an->add_option("--graph", graph_spec, "Graph spec")->required();
    add_algo(an, algo);
    add_common(an, common);
    an->add_option("--rate-method", rate_method, "auto, closed_form, cayley_exact, reachable_space_exact, bounds_only");
    an->add_option("--bias-method", bias_method, "auto, none, closed_form, cayley, iterative, general");
    an->add_flag("--full-b", full_b, "Include the full bias matrix in summary.json");
    an->callback([&] {
      handler = [&] {
        const Graph gr = parse_graph_spec(graph_spec, common.seed);
        AnalyzeOptions o;
        const auto rm = parse_rate_method(rate_method);
        if (!rm) throw ValidationError("rate-method", "unknown method '" + rate_method + "'");
        const auto bm = parse_bias_method(bias_method);
        if (!bm) throw ValidationError("bias-method", "unknown method '" + bias_method + "'");
        o.rate_method = *rm;
        o.bias_method = *bm;
        o.full_bias_matrix = full_b;
        const SpectralSummary s = analyze(gr, make_params(algo), o);
        write_text(resolve_out(common) / "summary.json", summary_to_json(s) + "\n");
        out << "R=" << fmt(s.rate) << " lower=" << fmt(s.lower) << " upper=" << fmt(s.upper) << " trB=" << fmt(s.trB)
            << " method=" << to_string(s.method) << " bias_method=" << to_string(s.bias_method) << "\n";
        for (const auto& [k, v] : s.extras) out << "  " << k << "=" << fmt(v) << "\n";
        for (const auto& f : s.discrepancy_flags) out << "  flag: " << f << "\n";
        return kExitOk;
      };
    });

    // sweep
    std::string q_grid = "0.1:0.9:0.1";
    std::string p_grid;
    auto* sw = app.add_subcommand("sweep", "Rate and bias over q (and p) grids");
    sw->add_option("--graph", graph_spec, "Graph spec")->required();
    sw->add_option("--algo", algo.algo, "bga or cbga");
    sw->add_option("--q-grid", q_grid, "lo:hi:step or comma list");
    sw->add_option("--p-grid", p_grid, "lo:hi:step or comma list (CBGA)");
    add_common(sw, common);
    sw->callback([&] {
      handler = [&] {
        const Graph gr = parse_graph_spec(graph_spec, common.seed);
        const auto a = parse_algorithm(algo.algo);
        if (!a) throw ValidationError("algo", "unknown algorithm '" + algo.algo + "'");
        const SweepResult r = sweep_tradeoff(gr, graph_spec, *a, parse_real_list(q_grid, "q-grid"),
                                             parse_real_list(p_grid, "p-grid"), common.workers);
        const fs::path dir = resolve_out(common);
        CsvWriter csv(dir / "sweep.csv", "bgossip.sweep", 1, {"q", "p", "R", "lower", "upper", "trB", "method"});
        for (const auto& pt : r.points) {
          csv.row({fmt(pt.q), pt.p ? fmt(*pt.p) : "", fmt(pt.summary.rate), fmt(pt.summary.lower),
                   fmt(pt.summary.upper), fmt(pt.summary.trB), std::string(to_string(pt.summary.method))});
          out << "q=" << fmt(pt.q) << (pt.p ? " p=" + fmt(*pt.p) : "") << " R=" << fmt(pt.summary.rate)
              << " trB=" << fmt(pt.summary.trB) << "\n";
        }
        out << "pareto rate_decreasing=" << r.pareto.rate_decreasing << " trB_increasing=" << r.pareto.trB_increasing
            << " verdict=" << (r.pareto.pareto() ? "monotone" : "not-monotone") << "\n";
        std::vector<Series> rate_series;
        std::vector<Series> bias_series;
        const std::size_t np = r.p_grid.empty() ? 1 : r.p_grid.size();
        if (r.p_grid.empty()) {
          Series sr{"R", {}, {}};
          Series sb{"trB", {}, {}};
          for (const auto& pt : r.points) {
            sr.x.push_back(pt.q);
            sr.y.push_back(pt.summary.rate.value_or(std::nan("")));
            sb.x.push_back(pt.q);
            sb.y.push_back(pt.summary.trB.value_or(std::nan("")));
          }
          rate_series.push_back(sr);
          bias_series.push_back(sb);
        } else {
          for (std::size_t i = 0; i < r.q_grid.size() && i < 6; ++i) {
            Series sr{"q=" + fmt(r.q_grid[i]), {}, {}};
            Series sb = sr;
            for (std::size_t j = 0; j < np; ++j) {
              const auto& pt = r.points[i * np + j];
              sr.x.push_back(*pt.p);
              sr.y.push_back(pt.summary.rate.value_or(std::nan("")));
              sb.x.push_back(*pt.p);
              sb.y.push_back(pt.summary.trB.value_or(std::nan("")));
            }
            rate_series.push_back(sr);
            bias_series.push_back(sb);
          }
        }
        const std::string xl = r.p_grid.empty() ? "q" : "p";
        maybe_svg(common, dir / "sweep_rate.svg", {"Rate R on " + graph_spec, xl, "R", false, false}, rate_series);
        maybe_svg(common, dir / "sweep_bias.svg", {"Bias trB on " + graph_spec, xl, "trB", false, false}, bias_series);
        return kExitOk;
      };
    });

    // scaling
    FamilyOptions family;
    std::string sizes = "100,200,400,800";
    int fit_start = -1;
    auto* sc = app.add_subcommand("scaling", "Exact R and trB along a graph family, with log-log fits");
    sc->add_option("--family", family.family, "ring, complete, torus or lattice");
    sc->add_option("--dim", family.dimension, "Torus dimension");
    sc->add_option("--generators", family.generators, "Lattice generators, e.g. 1,0|0,1|-1,0|0,-1");
    sc->add_option("--sizes", sizes, "Family sizes, lo:hi:step or comma list");
    sc->add_option("--fit-start", fit_start, "First row used in the fits (default: upper half)");
    add_algo(sc, algo);
    add_common(sc, common);
    sc->callback([&] {
      handler = [&] {
        ScalingOptions so;
        so.workers = common.workers;
        if (fit_start >= 0) so.fit_start = static_cast<std::size_t>(fit_start);
        const ScalingResult r = scaling_study(make_family(family), make_params(algo), parse_int_list(sizes, "sizes"), so);
        const fs::path dir = resolve_out(common);
        CsvWriter csv(dir / "scaling.csv", "bgossip.scaling", 1,
                      {"N", "size", "R", "one_minus_R", "trB", "pi0", "esr_C", "esr_M_minus_esr_C"});
        Series gap{"1 - R", {}, {}};
        Series tr{"trB", {}, {}};
        for (const auto& row : r.rows) {
          csv.row({std::to_string(row.n), std::to_string(row.size), fmt(row.rate), fmt(row.one_minus_rate),
                   fmt(row.trB), fmt(row.pi0), fmt(row.esr_c),
                   row.esr_c ? fmt(row.rate - *row.esr_c) : std::string("nan")});
          out << "N=" << row.n << " R=" << fmt(row.rate) << " 1-R=" << fmt(row.one_minus_rate)
              << " trB=" << fmt(row.trB) << " pi0=" << fmt(row.pi0) << "\n";
          gap.x.push_back(row.n);
          gap.y.push_back(row.one_minus_rate);
          tr.x.push_back(row.n);
          tr.y.push_back(row.trB);
        }
        out << "fit(1-R) slope=" << fmt(r.rate_fit.slope) << " se=" << fmt(r.rate_fit.slope_se)
            << " r2=" << fmt(r.rate_fit.r_squared) << "\n";
        out << "fit(trB) slope=" << fmt(r.trB_fit.slope) << " se=" << fmt(r.trB_fit.slope_se)
            << " r2=" << fmt(r.trB_fit.r_squared) << "\n";
        maybe_svg(common, dir / "scaling.svg", {"Scaling on " + r.family.describe(), "N", "value", true, true},
                  {gap, tr});
        return kExitOk;
      };
    });

    // rgg-bias
    RggBiasOptions rgg;
    std::string rgg_sizes = "50,71,100,141,200,283,400";
    auto* rb = app.add_subcommand("rgg-bias", "Monte Carlo bias on random geometric graphs vs complete and ring");
    rb->add_option("--sizes", rgg_sizes, "Node counts");
    rb->add_option("--runs", rgg.runs, "Runs per node count (>= 30)");
    rb->add_option("--radius-factor", rgg.radius_factor, "radius = factor * sqrt(log N / N)");
    rb->add_option("--tol", rgg.stop.tol, "Consensus tolerance");
    add_algo(rb, algo);
    add_common(rb, common);
    rb->callback([&] {
      handler = [&] {
        rgg.sizes = parse_int_list(rgg_sizes, "sizes");
        rgg.params = make_params(algo);
        rgg.seed = SeedPolicy(common.seed);
        rgg.workers = common.workers;
        const RggBiasResult r = rgg_bias_experiment(rgg);
        const fs::path dir = resolve_out(common);
        CsvWriter csv(dir / "rgg_bias.csv", "bgossip.rgg_bias", 1,
                      {"N", "mean_beta", "se", "runs", "discarded", "mean_degree", "radius", "complete_trB", "ring_trB"});
        Series srgg{"RGG (MC)", {}, {}};
        Series scomp{"complete", {}, {}};
        Series sring{"ring", {}, {}};
        for (const auto& pt : r.points) {
          csv.row({std::to_string(pt.n), fmt(pt.bias.mean_beta), fmt(pt.bias.standard_error),
                   std::to_string(pt.bias.runs), std::to_string(pt.discarded), fmt(pt.mean_degree), fmt(pt.radius),
                   fmt(pt.complete_trB), fmt(pt.ring_trB)});
          out << "N=" << pt.n << " beta=" << fmt(pt.bias.mean_beta) << " se=" << fmt(pt.bias.standard_error)
              << " discarded=" << pt.discarded << "\n";
          srgg.x.push_back(pt.n);
          srgg.y.push_back(pt.bias.mean_beta);
          scomp.x.push_back(pt.n);
          scomp.y.push_back(pt.complete_trB);
          sring.x.push_back(pt.n);
          sring.y.push_back(pt.ring_trB);
        }
        out << "slope rgg=" << fmt(r.rgg_fit.slope) << " (se " << fmt(r.rgg_fit.slope_se)
            << ") complete=" << fmt(r.complete_fit.slope) << " ring=" << fmt(r.ring_fit.slope) << "\n";
        maybe_svg(common, dir / "rgg_bias.svg", {"Asymptotic bias vs N", "N", "beta", true, true},
                  {scomp, srgg, sring});
        return kExitOk;
      };
    });

    // optimal-p
    std::string opt_grid = "0.01:0.99:0.01";
    auto* op = app.add_subcommand("optimal-p", "Grid search of the CBGA wake probability minimizing R");
    op->add_option("--graph", graph_spec, "Graph spec")->required();
    op->add_option("--q", algo.q, "Mixing weight");
    op->add_option("--p-grid", opt_grid, "p grid");
    add_common(op, common);
    op->callback([&] {
      handler = [&] {
        const Graph gr = parse_graph_spec(graph_spec, common.seed);
        const OptimalPResult r = optimal_p_search(gr, algo.q, parse_real_list(opt_grid, "p-grid"), common.workers);
        const fs::path dir = resolve_out(common);
        CsvWriter csv(dir / "optimal_p.csv", "bgossip.optimal_p", 1, {"p", "R", "lower_bound"});
        for (std::size_t i = 0; i < r.p_grid.size(); ++i) {
          csv.row({fmt(r.p_grid[i]), fmt(r.rates[i]),
                   r.lower_bound_curve.empty() ? "nan" : fmt(r.lower_bound_curve[i])});
        }
        out << "argmin_p=" << fmt(r.argmin_p) << " R=" << fmt(r.min_rate) << " theory_p=" << fmt(r.theoretical_p)
            << " distance=" << fmt(r.distance) << " grid_step=" << fmt(r.grid_step)
            << " lower_bound_argmin_p=" << fmt(r.lower_bound_argmin_p) << "\n";
        maybe_svg(common, dir / "optimal_p.svg", {"R vs p on " + graph_spec, "p", "R", false, false},
                  {{"R", r.p_grid, r.rates}});
        return kExitOk;
      };
    });

    // democracy
    std::string dem_sizes = "8,16,32,64,128";
    auto* de = app.add_subcommand("democracy", "pi'_0 and trB along a family, with a vanishing verdict");
    de->add_option("--family", family.family, "ring, complete, torus or lattice");
    de->add_option("--dim", family.dimension, "Torus dimension");
    de->add_option("--generators", family.generators, "Lattice generators");
    de->add_option("--sizes", dem_sizes, "Family sizes");
    add_algo(de, algo);
    add_common(de, common);
    de->callback([&] {
      handler = [&] {
        const DemocracyResult r = weak_democracy_check(make_family(family), make_params(algo),
                                                       parse_int_list(dem_sizes, "sizes"), common.workers);
        const fs::path dir = resolve_out(common);
        CsvWriter csv(dir / "democracy.csv", "bgossip.democracy", 1, {"size", "N", "pi0", "trB"});
        Series spi{"pi'_0", {}, {}};
        Series str{"trB", {}, {}};
        for (const auto& row : r.rows) {
          csv.row({std::to_string(row.size), std::to_string(row.n), fmt(row.pi0), fmt(row.trB)});
          out << "N=" << row.n << " pi0=" << fmt(row.pi0) << " trB=" << fmt(row.trB) << "\n";
          spi.x.push_back(row.n);
          spi.y.push_back(row.pi0);
          str.x.push_back(row.n);
          str.y.push_back(row.trB);
        }
        maybe_svg(common, dir / "democracy.svg", {"Invariant vector and bias on " + r.family.describe(), "N", "value",
                                                  true, true},
                  {spi, str});
        out << "verdict=" << to_string(r.verdict) << " slope(pi0)=" << fmt(r.pi0_fit.slope)
            << " slope(trB)=" << fmt(r.trB_fit.slope);
        if (r.limit) out << " limit=" << fmt(*r.limit);
        out << "\n";
        return kExitOk;
      };
    });

    // verify
    VerifyOptions vo;
    auto* ve = app.add_subcommand("verify", "Run the invariant and oracle checks on one configuration");
    ve->add_option("--graph", graph_spec, "Graph spec")->required();
    ve->add_option("--samples", vo.samples, "Sampled steps for protocol invariants");
    add_algo(ve, algo);
    add_common(ve, common);
    ve->callback([&] {
      handler = [&] {
        const Graph gr = parse_graph_spec(graph_spec, common.seed);
        vo.seed = common.seed;
        const auto results = run_verification(gr, make_params(algo), vo);
        bool all = true;
        json report = json::array();
        for (const auto& r : results) {
          out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
          all = all && r.passed;
          report.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        }
        write_text(resolve_out(common) / "verify.json", report.dump(2) + "\n");
        return all ? kExitOk : kExitInternal;
      };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::CallForVersion&) {
      out << BGOSSIP_VERSION << "\n";
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kExitValidation;
    }
    if (!handler) return kExitOk;
    const int code = handler();
    write_manifest(resolve_out(common), args, common);
    return code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace bgossip::cli
