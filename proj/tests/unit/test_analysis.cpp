#include "bgossip/analysis.hpp"
#include "bgossip/graph.hpp"
#include "bgossip/lyapunov.hpp"
#include "bgossip/rgg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace bgossip;

namespace {

Graph named(NamedFamily f, std::vector<int> s) { return build_named_graph(f, s); }

double oracle_cayley_rate(const Graph& g, const AlgoParams& params) {
  return oracle::moduli(oracle::literal_msa(g, params))[1];
}

SpectralSummary run(const Graph& g, const AlgoParams& params, RateMethod r, BiasMethod b) {
  AnalyzeOptions o;
  o.rate_method = r;
  o.bias_method = b;
  return analyze(g, params, o);
}

}  // namespace

TEST_CASE("complete graph closed forms") {
  const int n = 10;
  const Graph k = named(NamedFamily::kComplete, {n});
  for (double q : {0.2, 0.5, 0.8}) {
    const auto params = AlgoParams::bga(q);
    const CompleteClosedForms cf = complete_closed_forms(n, params);
    CHECK(cf.rate == doctest::Approx((1 - q) * (1 - q)).epsilon(1e-14));
    CHECK(cf.trB == doctest::Approx(q / (2 - q) * (1 - 1.0 / n)).epsilon(1e-14));
    CHECK(cf.unit_eigenvector[1] * q == doctest::Approx(cf.unit_eigenvector[0] * 2 * (1 - q)));
    const auto s = run(k, params, RateMethod::kReachableSpaceExact, BiasMethod::kGeneral);
    CHECK(std::abs(*s.rate - cf.rate) < 1e-12);
    CHECK(std::abs(*s.trB - cf.trB) < 1e-12);
    CHECK(*s.reachable_dimension == 1);
  }
  for (double p : {0.05, 0.3}) {
    const auto params = AlgoParams::cbga(0.5, p);
    const CompleteClosedForms cf = complete_closed_forms(n, params);
    const double w = n * p * std::pow(1 - p, n - 1);
    CHECK(cf.weight == doctest::Approx(w));
    CHECK(cf.rate == doctest::Approx(1 - 0.5 * 1.5 * w));
    CHECK(cf.trB == doctest::Approx(0.5 / 1.5 * (1 - 1.0 / n)));
  }
}

TEST_CASE("Cayley rates match the literal recursion spectrum") {
  const std::vector<Graph> graphs{named(NamedFamily::kRing, {8}), build_cayley({7}, {{1}, {3}}),
                                  named(NamedFamily::kTorus, {3, 3}), named(NamedFamily::kHypercube, {3})};
  for (const Graph& g : graphs) {
    for (const auto& params : {AlgoParams::bga(0.5), AlgoParams::cbga(0.5, 0.3)}) {
      const double want = oracle_cayley_rate(g, params);
      const auto c = run(g, params, RateMethod::kCayleyExact, BiasMethod::kCayley);
      const auto r = run(g, params, RateMethod::kReachableSpaceExact, BiasMethod::kGeneral);
      CHECK(*c.rate == doctest::Approx(want).epsilon(1e-10));
      CHECK(*r.rate == doctest::Approx(want).epsilon(1e-9));
      CHECK(*c.trB == doctest::Approx(*r.trB).epsilon(1e-9));
      CHECK(c.lower <= *c.rate + 1e-10);
      CHECK(*c.rate <= c.upper + 1e-10);
    }
  }
}

TEST_CASE("non-Cayley digraph: reachable-space rate against an eigen expansion") {
  const Graph g = Graph::from_edges(
      5, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {3, 1}, {2, 0}});
  for (const auto& params : {AlgoParams::bga(0.4), AlgoParams::cbga(0.4, 0.3)}) {
    const auto s = run(g, params, RateMethod::kReachableSpaceExact, BiasMethod::kGeneral);
    CHECK(*s.rate == doctest::Approx(oracle::rate_by_expansion(g, params)).epsilon(1e-8));
    CHECK(*s.trB >= 0.0);
    CHECK(s.lower <= *s.rate + 1e-10);
    CHECK(*s.rate <= s.upper + 1e-10);
  }
}

TEST_CASE("reachable-space rate stays exact when the Krylov space fills the invariant subspace") {
  // 12 nodes: the space reaches dim {X = X^T, X 1 = 0} = 66, where rounding
  // used to leak in modes with X 1 != 0.
  const Graph g = build_rgg(12, 0.45, 4, true).graph;
  for (const auto& params : {AlgoParams::bga(0.3), AlgoParams::cbga(0.3, 0.25)}) {
    const auto s = run(g, params, RateMethod::kReachableSpaceExact, BiasMethod::kNone);
    CHECK(*s.reachable_dimension <= 66);
    CHECK(*s.rate == doctest::Approx(oracle::rate_by_expansion(g, params)).epsilon(1e-9));
    CHECK(*s.rate <= s.upper + 1e-10);
  }
}

TEST_CASE("iterative bias agrees with the general method when it applies") {
  const Graph ring = named(NamedFamily::kRing, {7});
  const auto params = AlgoParams::cbga(0.5, 0.4);
  CHECK(bias_matrix_iterative(ring, params).trace() ==
        doctest::Approx(bias_matrix_general(ring, params).trace()).epsilon(1e-9));
  const Graph directed = build_cayley({7}, {{1}, {3}});
  CHECK(run(directed, AlgoParams::bga(0.5), RateMethod::kBoundsOnly, BiasMethod::kIterative).trB.has_value());
  const Graph unbalanced = Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  CHECK_THROWS_AS(bias_matrix_iterative(unbalanced, AlgoParams::bga(0.5)), ValidationError);
}

TEST_CASE("general bias matrix: trace equals the Cayley shortcut and the matrix is PSD-symmetric") {
  const Graph g = named(NamedFamily::kTorus, {3, 3});
  const auto params = AlgoParams::bga(0.7);
  AnalyzeOptions o;
  o.bias_method = BiasMethod::kCayley;
  o.full_bias_matrix = true;
  const auto cay = analyze(g, params, o);
  const Matrix general = bias_matrix_general(g, params);
  CHECK((general - general.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((general - *cay.B).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(std::abs(cay.invariant_vector.sum() - 1.0) < 1e-13);
}

TEST_CASE("method applicability is validated") {
  const Graph g = Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(run(g, AlgoParams::bga(0.5), RateMethod::kCayleyExact, BiasMethod::kNone), ValidationError);
  CHECK_THROWS_AS(run(g, AlgoParams::bga(0.5), RateMethod::kClosedForm, BiasMethod::kNone), ValidationError);
  const Graph big = named(NamedFamily::kRing, {60});
  CHECK_THROWS_AS(run(big, AlgoParams::bga(0.5), RateMethod::kReachableSpaceExact, BiasMethod::kNone),
                  ValidationError);
  CHECK(parse_rate_method("reachable_space_exact") == RateMethod::kReachableSpaceExact);
  CHECK(parse_bias_method("general") == BiasMethod::kGeneral);
  CHECK_FALSE(parse_rate_method("magic").has_value());
}

TEST_CASE("auto routing") {
  const auto k = analyze(named(NamedFamily::kComplete, {30}), AlgoParams::bga(0.5));
  CHECK(k.method == RateMethod::kClosedForm);
  CHECK(*k.rate == doctest::Approx(0.25));
  CHECK(*k.trB == doctest::Approx(1.0 / 3.0 * 29.0 / 30.0));
  const auto r = analyze(named(NamedFamily::kRing, {30}), AlgoParams::cbga(0.5, 1.0 / 3));
  CHECK(r.method == RateMethod::kCayleyExact);
  CHECK(r.lower <= *r.rate);
  CHECK(*r.rate <= r.upper);
  CHECK(r.extras.count("ring_asymptotic_lower_8pi") == 1);
  CHECK_FALSE(r.discrepancy_flags.empty());
}
