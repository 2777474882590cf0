#include "bgossip/graph.hpp"
#include "bgossip/lyapunov.hpp"
#include "bgossip/spectral.hpp"

#include <doctest.h>

#include <cmath>

using namespace bgossip;

TEST_CASE("spectral radius and essential spectral radius") {
  Matrix m(3, 3);
  m << 1.0, 0.0, 0.0, 0.0, -0.6, 0.0, 0.0, 0.0, 0.3;
  CHECK(spectral_radius(m) == doctest::Approx(1.0));
  CHECK(essential_spectral_radius(m) == doctest::Approx(0.6));
  CHECK(spectral_radius_symmetric(m) == doctest::Approx(1.0));

  Matrix rot(2, 2);
  rot << 0.0, -0.5, 0.5, 0.0;  // eigenvalues +-0.5i
  CHECK(spectral_radius(rot) == doctest::Approx(0.5));
  CHECK_THROWS_AS(essential_spectral_radius(rot), ComputationError);
}

TEST_CASE("reachable space of a diagonal operator") {
  const Vector d = (Vector(4) << 0.9, 0.5, 0.5, 0.1).finished();
  auto op = [&](const Matrix& x) -> Matrix { return d.asDiagonal() * x; };
  Matrix start = Matrix::Zero(4, 1);
  start(0, 0) = 1.0;
  start(1, 0) = 1.0;
  start(2, 0) = 1.0;
  const ReachableSpace s = reachable_space(op, start);
  CHECK(s.dimension == 2);  // two distinct eigenvalues in the span
  CHECK(s.spectral_radius == doctest::Approx(0.9).epsilon(1e-12));

  Matrix only_small = Matrix::Zero(4, 1);
  only_small(3, 0) = 2.0;
  CHECK(reachable_space(op, only_small).spectral_radius == doctest::Approx(0.1).epsilon(1e-12));
  CHECK_THROWS_AS(reachable_space(op, start, 1e-10, 1), ComputationError);
}

TEST_CASE("reachable space of the complete-graph operator is one dimensional") {
  const Graph k = build_named_graph(NamedFamily::kComplete, std::vector<int>{7});
  for (const auto& params : {AlgoParams::bga(0.3), AlgoParams::cbga(0.3, 0.2)}) {
    const LyapunovOperator op(k, params);
    const ReachableSpace s = reachable_space([&](const Matrix& x) { return op.apply(x); }, omega(7));
    CHECK(s.dimension == 1);
  }
}
