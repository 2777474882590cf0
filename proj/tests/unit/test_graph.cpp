#include "bgossip/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace bgossip;

TEST_CASE("adjacency follows the in-neighbor convention") {
  const std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}};
  const Graph g = Graph::from_edges(3, e);
  const Matrix a = g.adjacency();
  CHECK(a(1, 0) == 1.0);  // edge 0 -> 1
  CHECK(a(0, 1) == 0.0);
  CHECK(a(2, 1) == 1.0);
  const Matrix l = g.laplacian();
  CHECK(l(1, 1) == 1.0);
  CHECK(l(0, 0) == 0.0);
  CHECK(l.rowwise().sum().cwiseAbs().maxCoeff() == 0.0);
  CHECK(g.in_degree_matrix()(2, 2) == 1.0);
  CHECK(g.out_degree_matrix()(2, 2) == 0.0);
  CHECK_FALSE(g.is_symmetric());
  CHECK_FALSE(g.is_strongly_connected());
}

TEST_CASE("from_edges rejects self loops and out-of-range endpoints") {
  const std::vector<std::pair<int, int>> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), ValidationError);
  const std::vector<std::pair<int, int>> far{{0, 5}};
  CHECK_THROWS_AS(Graph::from_edges(3, far), ValidationError);
  const std::vector<std::pair<int, int>> dup{{0, 1}, {0, 1}, {1, 0}};
  CHECK(Graph::from_edges(2, dup).edge_count() == 2);
}

TEST_CASE("named families") {
  const std::vector<int> six{6};
  const Graph k6 = build_named_graph(NamedFamily::kComplete, six);
  CHECK(k6.is_complete());
  CHECK(k6.regular_degree() == 5);
  CHECK(k6.cayley()->generates_group);

  const Graph ring = build_named_graph(NamedFamily::kRing, six);
  CHECK(is_ring(ring));
  CHECK(ring.regular_degree() == 2);
  CHECK(ring.is_symmetric());
  CHECK(ring.cayley()->inverse_closed);

  const std::vector<int> tor{3, 4};
  const Graph torus = build_named_graph(NamedFamily::kTorus, tor);
  CHECK(torus.node_count() == 12);
  CHECK(torus.regular_degree() == 4);
  CHECK(torus.is_strongly_connected());

  const std::vector<int> cube{3};
  const Graph h3 = build_named_graph(NamedFamily::kHypercube, cube);
  CHECK(h3.node_count() == 8);
  CHECK(h3.regular_degree() == 3);
}

TEST_CASE("hypercube of dimension 2 is the 4-ring") {
  const std::vector<int> two{2};
  const std::vector<int> four{4};
  const Graph h2 = build_named_graph(NamedFamily::kHypercube, two);
  const Graph r4 = build_named_graph(NamedFamily::kRing, four);
  CHECK(oracle::isomorphic(h2, r4));
  const std::vector<int> five{5};
  CHECK_FALSE(oracle::isomorphic(build_named_graph(NamedFamily::kComplete, four), r4));
  (void)five;
}

TEST_CASE("Cayley construction and validation") {
  const Graph z7 = build_cayley({7}, {{1}, {3}});
  CHECK(z7.node_count() == 7);
  CHECK(z7.has_edge(0, 1));
  CHECK(z7.has_edge(0, 3));
  CHECK_FALSE(z7.has_edge(1, 0));
  CHECK(z7.cayley()->generates_group);
  CHECK_FALSE(z7.cayley()->inverse_closed);

  const Graph half = build_cayley({6}, {{2}});
  CHECK_FALSE(half.cayley()->generates_group);
  CHECK_FALSE(half.is_strongly_connected());

  Graph plain = Graph::from_edges(7, z7.edges());
  CHECK_FALSE(plain.cayley().has_value());
  CHECK_NOTHROW(plain.attach_cayley(*z7.cayley()));
  Graph other = build_named_graph(NamedFamily::kRing, std::vector<int>{7});
  CHECK_THROWS_AS(other.attach_cayley(*z7.cayley()), ValidationError);

  CHECK_THROWS_AS(build_cayley({5}, {{0}}), ValidationError);
}

TEST_CASE("lattice truncation keeps generators inside the box") {
  const Graph g = build_lattice_cayley({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {2, 0}}, 1);
  CHECK(g.node_count() == 9);
  CHECK(g.regular_degree() == 4);  // (2,0) falls outside [-1,1]^2
  const Graph big = build_lattice_cayley({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {2, 0}}, 2);
  CHECK(big.node_count() == 25);
  CHECK(big.regular_degree() == 5);
}

TEST_CASE("hash is stable and edge sensitive") {
  const Graph a = build_named_graph(NamedFamily::kRing, std::vector<int>{8});
  const Graph b = build_named_graph(NamedFamily::kRing, std::vector<int>{8});
  CHECK(a.hash() == b.hash());
  CHECK(a.hash() != build_named_graph(NamedFamily::kRing, std::vector<int>{9}).hash());
}

TEST_CASE("graph_of_matrix and subgraph_of") {
  const Graph ring = build_named_graph(NamedFamily::kRing, std::vector<int>{6});
  CHECK(graph_of_matrix(ring.adjacency()) == ring);
  const Graph k6 = build_named_graph(NamedFamily::kComplete, std::vector<int>{6});
  CHECK(subgraph_of(ring, k6));
  CHECK_FALSE(subgraph_of(k6, ring));
}

TEST_CASE("reachability on a directed path") {
  const std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {3, 2}};
  const Graph g = Graph::from_edges(4, e);
  CHECK(g.reachable_from(0) == std::vector<int>{0, 1, 2});
  CHECK(g.max_in_degree() == 2);
  CHECK_FALSE(g.regular_degree().has_value());
}
