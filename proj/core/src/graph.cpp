#include "bgossip/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace bgossip {

std::string_view to_string(NamedFamily family) {
  switch (family) {
    case NamedFamily::kComplete: return "complete";
    case NamedFamily::kRing: return "ring";
    case NamedFamily::kTorus: return "torus";
    case NamedFamily::kHypercube: return "hypercube";
  }
  return "unknown";
}

std::optional<NamedFamily> parse_named_family(std::string_view name) {
  if (name == "complete") return NamedFamily::kComplete;
  if (name == "ring") return NamedFamily::kRing;
  if (name == "torus") return NamedFamily::kTorus;
  if (name == "hypercube") return NamedFamily::kHypercube;
  return std::nullopt;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1) throw ValidationError("n", "graph needs at least one node");
  std::vector<std::pair<int, int>> sorted(edges.begin(), edges.end());
  for (const auto& [s, t] : sorted) {
    if (s < 0 || s >= n || t < 0 || t >= n) {
      throw ValidationError("edges", "edge (" + std::to_string(s) + ", " + std::to_string(t) +
                                         ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (s == t) throw ValidationError("edges", "self-loop at node " + std::to_string(s));
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Graph g;
  g.n_ = n;
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const auto& [s, t] : sorted) {
    ++g.out_offsets_[s + 1];
    ++g.in_offsets_[t + 1];
  }
  for (int i = 0; i < n; ++i) {
    g.out_offsets_[i + 1] += g.out_offsets_[i];
    g.in_offsets_[i + 1] += g.in_offsets_[i];
  }
  g.out_targets_.resize(sorted.size());
  g.in_sources_.resize(sorted.size());
  std::vector<int> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
  std::vector<int> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  // `sorted` is ordered by (source, target), so both lists come out sorted.
  for (const auto& [s, t] : sorted) {
    g.out_targets_[out_fill[s]++] = t;
    g.in_sources_[in_fill[t]++] = s;
  }
  return g;
}

bool Graph::has_edge(int source, int target) const {
  const auto nb = out_neighbors(source);
  return std::binary_search(nb.begin(), nb.end(), target);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int v = 0; v < n_; ++v) {
    for (int u : out_neighbors(v)) out.emplace_back(v, u);
  }
  return out;
}

Matrix Graph::adjacency() const {
  Matrix a = Matrix::Zero(n_, n_);
  for (int v = 0; v < n_; ++v) {
    for (int u : out_neighbors(v)) a(u, v) = 1.0;
  }
  return a;
}

Matrix Graph::in_degree_matrix() const {
  Matrix d = Matrix::Zero(n_, n_);
  for (int u = 0; u < n_; ++u) d(u, u) = in_degree(u);
  return d;
}

Matrix Graph::out_degree_matrix() const {
  Matrix d = Matrix::Zero(n_, n_);
  for (int v = 0; v < n_; ++v) d(v, v) = out_degree(v);
  return d;
}

Matrix Graph::laplacian() const { return in_degree_matrix() - adjacency(); }

bool Graph::is_symmetric() const {
  for (int v = 0; v < n_; ++v) {
    for (int u : out_neighbors(v)) {
      if (!has_edge(u, v)) return false;
    }
  }
  return true;
}

std::vector<int> Graph::reachable_from(int source) const {
  std::vector<char> seen(n_, 0);
  std::deque<int> queue{source};
  seen[source] = 1;
  std::vector<int> order;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int u : out_neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

bool Graph::is_strongly_connected() const {
  if (static_cast<int>(reachable_from(0).size()) != n_) return false;
  // Reverse reachability from 0 over in-neighbor lists.
  std::vector<char> seen(n_, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    ++count;
    for (int v : in_neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return count == n_;
}

bool Graph::is_complete() const {
  return edge_count() == static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1);
}

std::optional<int> Graph::regular_degree() const {
  const int d = in_degree(0);
  for (int u = 1; u < n_; ++u) {
    if (in_degree(u) != d) return std::nullopt;
  }
  return d;
}

int Graph::max_in_degree() const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d = std::max(d, in_degree(u));
  return d;
}

void Graph::attach_cayley(CayleyStructure structure) {
  const CyclicGroup& group = structure.group;
  if (group.order() != n_) {
    throw ValidationError("cayley", "group order " + std::to_string(group.order()) + " differs from node count " +
                                        std::to_string(n_));
  }
  std::sort(structure.generators.begin(), structure.generators.end());
  structure.generators.erase(std::unique(structure.generators.begin(), structure.generators.end()),
                             structure.generators.end());
  for (int s : structure.generators) {
    if (s == 0) throw ValidationError("cayley.generators", "the identity element cannot be a generator");
  }
  if (edge_count() != static_cast<std::size_t>(n_) * structure.generators.size()) {
    throw ValidationError("cayley", "edge count does not match the Cayley adjacency of the generators");
  }
  for (int g = 0; g < n_; ++g) {
    for (int s : structure.generators) {
      if (!has_edge(g, group.add(g, s))) {
        throw ValidationError("cayley", "edge " + std::to_string(g) + " -> " + std::to_string(group.add(g, s)) +
                                            " required by the generators is missing");
      }
    }
  }
  structure.generates_group = is_strongly_connected();
  structure.inverse_closed = std::all_of(structure.generators.begin(), structure.generators.end(), [&](int s) {
    return std::binary_search(structure.generators.begin(), structure.generators.end(), group.neg(s));
  });
  cayley_ = std::move(structure);
}

std::uint64_t Graph::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      h ^= (value >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (const auto& [s, t] : edges()) {
    mix(static_cast<std::uint64_t>(s));
    mix(static_cast<std::uint64_t>(t));
  }
  return h;
}

Graph build_cayley(const CyclicGroup& group, std::vector<int> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  const int n = group.order();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * generators.size());
  for (int s : generators) {
    if (s <= 0 || s >= n) throw ValidationError("generators", "generator must be a nonzero group element");
  }
  for (int g = 0; g < n; ++g) {
    for (int s : generators) edges.emplace_back(g, group.add(g, s));
  }
  Graph graph = Graph::from_edges(n, edges);
  graph.attach_cayley(CayleyStructure{group, std::move(generators), false, false});
  return graph;
}

Graph build_cayley(const std::vector<int>& moduli, const std::vector<std::vector<int>>& generators, int max_nodes) {
  CyclicGroup group(moduli, max_nodes);
  std::vector<int> indices;
  indices.reserve(generators.size());
  for (const auto& coords : generators) {
    const int idx = group.index(coords);
    if (idx == 0) throw ValidationError("generators", "generator reduces to the identity element");
    indices.push_back(idx);
  }
  if (indices.empty()) throw ValidationError("generators", "generator set is empty");
  return build_cayley(group, std::move(indices));
}

Graph build_named_graph(NamedFamily family, std::span<const int> sizes, int max_nodes) {
  auto single_size = [&](const char* what) {
    if (sizes.size() != 1) throw ValidationError("size", std::string(what) + " takes exactly one size");
    return sizes[0];
  };
  switch (family) {
    case NamedFamily::kComplete: {
      const int n = single_size("complete");
      if (n < 3) throw ValidationError("size", "complete graph needs N >= 3");
      if (n > max_nodes) throw ValidationError("size", "N exceeds the configured maximum");
      CyclicGroup group({n}, max_nodes);
      std::vector<int> gens(n - 1);
      for (int s = 1; s < n; ++s) gens[s - 1] = s;
      return build_cayley(group, std::move(gens));
    }
    case NamedFamily::kRing: {
      const int n = single_size("ring");
      if (n < 3) throw ValidationError("size", "ring needs N >= 3");
      if (n > max_nodes) throw ValidationError("size", "N exceeds the configured maximum");
      return build_cayley(CyclicGroup({n}, max_nodes), {1, n - 1});
    }
    case NamedFamily::kTorus: {
      if (sizes.empty()) throw ValidationError("size", "torus needs at least one axis length");
      for (int m : sizes) {
        if (m < 2) throw ValidationError("size", "torus axis length must be >= 2");
      }
      CyclicGroup group(std::vector<int>(sizes.begin(), sizes.end()), max_nodes);
      std::vector<int> gens;
      for (int axis = 0; axis < group.rank(); ++axis) {
        std::vector<int> e(group.rank(), 0);
        e[axis] = 1;
        gens.push_back(group.index(e));
        e[axis] = -1;
        gens.push_back(group.index(e));
      }
      return build_cayley(group, std::move(gens));
    }
    case NamedFamily::kHypercube: {
      const int dim = single_size("hypercube");
      if (dim < 1) throw ValidationError("size", "hypercube dimension must be >= 1");
      if (dim > 30) throw ValidationError("size", "N exceeds the configured maximum");
      CyclicGroup group(std::vector<int>(dim, 2), max_nodes);
      std::vector<int> gens;
      for (int axis = 0; axis < dim; ++axis) {
        std::vector<int> e(dim, 0);
        e[axis] = 1;
        gens.push_back(group.index(e));
      }
      return build_cayley(group, std::move(gens));
    }
  }
  throw ValidationError("family", "unknown graph family");
}

Graph build_lattice_cayley(const std::vector<std::vector<int>>& lattice_generators, int n, int max_nodes) {
  if (lattice_generators.empty()) throw ValidationError("generators", "generator set is empty");
  if (n < 1) throw ValidationError("n", "lattice half-width must be >= 1");
  const std::size_t dim = lattice_generators.front().size();
  std::vector<std::vector<int>> kept;
  for (const auto& s : lattice_generators) {
    if (s.size() != dim) throw ValidationError("generators", "generators have inconsistent dimensions");
    if (std::all_of(s.begin(), s.end(), [](int c) { return c == 0; })) {
      throw ValidationError("generators", "0 cannot be a generator");
    }
    if (std::all_of(s.begin(), s.end(), [n](int c) { return c >= -n && c <= n; })) kept.push_back(s);
  }
  if (kept.empty()) throw ValidationError("n", "no generator lies inside [-n, n]^d");
  return build_cayley(std::vector<int>(dim, 2 * n + 1), kept, max_nodes);
}

bool is_ring(const Graph& graph) {
  const int n = graph.node_count();
  if (n < 3) return false;
  for (int u = 0; u < n; ++u) {
    const auto nb = graph.in_neighbors(u);
    const int lo = std::min((u + 1) % n, (u + n - 1) % n);
    const int hi = std::max((u + 1) % n, (u + n - 1) % n);
    if (nb.size() != 2 || nb[0] != lo || nb[1] != hi) return false;
  }
  return true;
}

Graph graph_of_matrix(const Matrix& m, double zero_tol) {
  if (m.rows() != m.cols()) throw ValidationError("matrix", "matrix must be square");
  if (zero_tol < 0) throw ValidationError("zero_tol", "tolerance must be >= 0");
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(m.rows());
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (v != w && std::abs(m(w, v)) > zero_tol) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, edges);
}

bool subgraph_of(const Graph& g1, const Graph& g2) {
  if (g1.node_count() != g2.node_count()) throw ValidationError("graph", "node counts differ");
  for (int v = 0; v < g1.node_count(); ++v) {
    for (int u : g1.out_neighbors(v)) {
      if (!g2.has_edge(v, u)) return false;
    }
  }
  return true;
}

}  // namespace bgossip
