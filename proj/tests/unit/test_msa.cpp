#include "bgossip/graph.hpp"
#include "bgossip/lyapunov.hpp"
#include "bgossip/msa.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace bgossip;

namespace {
double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
Graph ring(int n) { return build_named_graph(NamedFamily::kRing, std::vector<int>{n}); }
}  // namespace

TEST_CASE("generic and operator MSA matrices equal the literal construction") {
  const std::vector<Graph> graphs{ring(8), build_cayley({7}, {{1}, {3}}),
                                  build_named_graph(NamedFamily::kTorus, std::vector<int>{3, 3}),
                                  build_named_graph(NamedFamily::kHypercube, std::vector<int>{3})};
  for (const Graph& g : graphs) {
    for (const auto& params : {AlgoParams::bga(0.5), AlgoParams::cbga(0.3, 0.35)}) {
      const Matrix ref = oracle::literal_msa(g, params);
      CHECK(max_abs(msa_matrix_generic(g, params) - ref) < 1e-13);
      CHECK(max_abs(msa_matrix_via_operator(g, params) - ref) < 1e-13);
      // columns of M sum to one: the recursion preserves 1^T Delta 1 / N
      CHECK((ref.colwise().sum().array() - 1.0).abs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("ring fast paths") {
  for (int n = 5; n <= 12; ++n) {
    const auto bga = AlgoParams::bga(0.6);
    CHECK(max_abs(msa_ring_bga(n, 0.6).M() - msa_matrix_generic(ring(n), bga)) < 1e-13);
  }
  for (int n = 9; n <= 13; ++n) {
    const auto c = AlgoParams::cbga(0.6, 0.25);
    const MsaRecursion r = msa_ring_cbga(n, 0.6, 0.25);
    CHECK(r.construction == "ring_cbga");
    CHECK(max_abs(r.M() - msa_matrix_generic(ring(n), c)) < 1e-13);
    CHECK(max_abs(r.C - msa_c_part(ring(n), c)) < 1e-13);
  }
  CHECK_THROWS_AS(msa_ring_bga(4, 0.5), ValidationError);
  CHECK_THROWS_AS(msa_ring_cbga(8, 0.5, 0.5), ValidationError);
  CHECK_THROWS_AS(msa_recursion_cayley(build_cayley({7}, {{1}, {3}}), AlgoParams::bga(0.5), MsaRoute::kRingFast),
                  ValidationError);
}

TEST_CASE("recursion tracks the second-moment matrix") {
  const Graph g = build_named_graph(NamedFamily::kTorus, std::vector<int>{3, 4});
  for (const auto& params : {AlgoParams::bga(0.5), AlgoParams::cbga(0.5, 0.2)}) {
    const Matrix m = msa_recursion_cayley(g, params).M();
    Matrix delta = Matrix::Constant(12, 12, 1.0 / 12);
    Vector pi = Vector::Constant(12, 1.0 / 12);
    for (int t = 0; t < 15; ++t) {
      delta = oracle::lyapunov(g, params, delta);
      pi = m * pi;
      CHECK((delta.col(0) - pi).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("non-Cayley graphs are rejected") {
  const Graph g = Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(msa_recursion_cayley(g, AlgoParams::bga(0.5)), ValidationError);
}

TEST_CASE("invariant vector paths agree") {
  const Matrix m = msa_recursion_cayley(ring(10), AlgoParams::cbga(0.5, 0.3)).M();
  InvariantOptions o;
  const Vector e = invariant_vector(m, o);
  o.method = InvariantMethod::kLinearSolve;
  const Vector l = invariant_vector(m, o);
  o.method = InvariantMethod::kFixedPoint;
  const Vector f = invariant_vector(m, o);
  CHECK(e.sum() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((m * e - e).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((e - l).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((e - f).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("a disconnected generator set has no unique invariant vector") {
  const Graph g = build_cayley({6}, {{2}, {4}});
  const Matrix m = msa_recursion_cayley(g, AlgoParams::bga(0.5)).M();
  CHECK_THROWS_AS(invariant_vector(m), ComputationError);
}
