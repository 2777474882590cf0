#pragma once

// Small hand-rolled generators for property tests. Every case is derived
// from a fixed seed so failures replay exactly.

#include "bgossip/graph.hpp"
#include "bgossip/protocol.hpp"
#include "bgossip/rng.hpp"

#include <random>
#include <string>
#include <vector>

namespace gen {

struct Case {
  bgossip::Graph graph;
  bgossip::AlgoParams params;
  std::string label;
};

inline double uniform(bgossip::Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int integer(bgossip::Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bgossip::AlgoParams params(bgossip::Rng& rng) {
  const double q = uniform(rng, 0.05, 0.95);
  if (integer(rng, 0, 1) == 0) return bgossip::AlgoParams::bga(q);
  return bgossip::AlgoParams::cbga(q, uniform(rng, 0.05, 0.9));
}

/// Random Cayley graph on Z_m or Z_a x Z_b with up to `max_nodes` nodes. The
/// generator set may be asymmetric and need not generate the group.
inline bgossip::Graph cayley(bgossip::Rng& rng, int max_nodes) {
  std::vector<int> moduli;
  if (integer(rng, 0, 2) == 0 && max_nodes >= 4) {
    const int a = integer(rng, 2, 3);
    moduli = {a, integer(rng, 2, std::max(2, max_nodes / a))};
  } else {
    moduli = {integer(rng, 3, max_nodes)};
  }
  int order = 1;
  for (int m : moduli) order *= m;
  const int count = integer(rng, 1, std::min(3, order - 1));
  std::vector<std::vector<int>> gens;
  while (static_cast<int>(gens.size()) < count) {
    std::vector<int> g;
    bool zero = true;
    for (int m : moduli) {
      g.push_back(integer(rng, 0, m - 1));
      zero = zero && g.back() == 0;
    }
    if (!zero) gens.push_back(g);
  }
  return bgossip::build_cayley(moduli, gens);
}

/// Random digraph (no Cayley structure) with edge probability `density`,
/// made strongly connected by a directed Hamiltonian cycle.
inline bgossip::Graph digraph(bgossip::Rng& rng, int n, double density) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v && uniform(rng, 0.0, 1.0) < density) edges.emplace_back(v, u);
  return bgossip::Graph::from_edges(n, edges);
}

}  // namespace gen
