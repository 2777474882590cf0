#include "bgossip/circulant.hpp"
#include "bgossip/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace bgossip;

TEST_CASE("cayley_matrix round trips through column 0") {
  const CyclicGroup grp({3, 4});
  Vector v(12);
  for (int i = 0; i < 12; ++i) v[i] = 0.1 * i - 0.3 * (i % 5);
  const Matrix m = cayley_matrix(GeneratingVector(grp, v));
  CHECK(is_cayley_matrix(m, grp));
  CHECK((generating_vector_of(m, grp).entries - v).cwiseAbs().maxCoeff() == 0.0);
  for (int h = 0; h < 12; ++h)
    for (int g = 0; g < 12; ++g) CHECK(m(h, g) == v[grp.sub(h, g)]);

  Matrix broken = m;
  broken(0, 1) += 1.0;
  CHECK_FALSE(is_cayley_matrix(broken, grp));
  CHECK_THROWS(generating_vector_of(broken, grp));
}

TEST_CASE("circulant eigenvalues agree with a dense solver") {
  for (const std::vector<int>& mods : {std::vector<int>{7}, std::vector<int>{3, 4}, std::vector<int>{2, 2, 3}}) {
    const CyclicGroup grp(mods);
    Vector v(grp.order());
    for (int i = 0; i < grp.order(); ++i) v[i] = std::sin(1.7 * i + 0.3);
    const auto lam = circulant_eigenvalues(GeneratingVector(grp, v));
    std::vector<double> mine;
    for (const auto& l : lam) mine.push_back(std::abs(l));
    std::sort(mine.rbegin(), mine.rend());
    const auto ref = oracle::moduli(cayley_matrix(GeneratingVector(grp, v)));
    REQUIRE(mine.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(mine[i] == doctest::Approx(ref[i]).epsilon(1e-10));
  }
}

TEST_CASE("omega vector generates I - 11^T/N") {
  const CyclicGroup grp({5});
  const Matrix m = cayley_matrix(omega_vector(grp));
  const Matrix want = Matrix::Identity(5, 5) - Matrix::Constant(5, 5, 0.2);
  CHECK((m - want).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("Laplacian of a Cayley graph is a Cayley matrix") {
  const Graph g = build_cayley({7}, {{1}, {3}});
  CHECK(is_cayley_matrix(g.laplacian(), g.cayley()->group));
  CHECK(is_cayley_matrix(g.adjacency(), g.cayley()->group));
}
