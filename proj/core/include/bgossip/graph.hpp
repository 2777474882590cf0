#pragma once

#include "bgossip/group.hpp"
#include "bgossip/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace bgossip {

inline constexpr int kDefaultMaxNodes = 1 << 16;

/// Abelian Cayley structure G(group, S): edge g -> h iff h - g is in S.
struct CayleyStructure {
  CyclicGroup group;
  std::vector<int> generators;  // element indices, sorted, unique, never 0
  bool generates_group = false;
  bool inverse_closed = false;

  bool operator==(const CayleyStructure& other) const {
    return group == other.group && generators == other.generators;
  }
};

enum class NamedFamily { kComplete, kRing, kTorus, kHypercube };

std::string_view to_string(NamedFamily family);
std::optional<NamedFamily> parse_named_family(std::string_view name);

/// Directed graph without self-loops.
///
/// Orientation follows the analysis convention: adjacency()(u, v) == 1 iff
/// the edge v -> u exists, i.e. v is an in-neighbor of u. Edge lists passed
/// in or returned are (source, target) pairs.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges collapse. Throws ValidationError on self-loops or
  /// endpoints outside [0, n).
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return out_targets_.size(); }

  /// Sorted neighbor lists.
  std::span<const int> out_neighbors(int v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const int> in_neighbors(int u) const {
    return {in_sources_.data() + in_offsets_[u], in_sources_.data() + in_offsets_[u + 1]};
  }
  int out_degree(int v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  int in_degree(int u) const { return in_offsets_[u + 1] - in_offsets_[u]; }
  bool has_edge(int source, int target) const;

  /// (source, target) pairs sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  Matrix adjacency() const;
  Matrix in_degree_matrix() const;   // D^- = diag(A 1)
  Matrix out_degree_matrix() const;  // D^+ = diag(A^T 1)
  Matrix laplacian() const;          // D^- - A

  bool is_symmetric() const;
  bool is_strongly_connected() const;
  bool is_complete() const;
  /// Common in-degree, if every node has the same one.
  std::optional<int> regular_degree() const;
  int max_in_degree() const;

  /// Nodes reachable from `source` along edge directions.
  std::vector<int> reachable_from(int source) const;

  const std::optional<CayleyStructure>& cayley() const noexcept { return cayley_; }
  /// Attaches a Cayley structure after checking that the adjacency is exactly
  /// the Cayley adjacency of `structure`. Throws ValidationError otherwise.
  void attach_cayley(CayleyStructure structure);

  /// FNV-1a over node count and sorted edge list.
  std::uint64_t hash() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && out_offsets_ == other.out_offsets_ && out_targets_ == other.out_targets_;
  }

 private:
  int n_ = 0;
  std::vector<int> out_offsets_{0};
  std::vector<int> out_targets_;
  std::vector<int> in_offsets_{0};
  std::vector<int> in_sources_;
  std::optional<CayleyStructure> cayley_;
};

/// Complete, ring and hypercube take one size; torus takes one size per axis.
/// For hypercube the size is the dimension n (N = 2^n).
Graph build_named_graph(NamedFamily family, std::span<const int> sizes, int max_nodes = kDefaultMaxNodes);

/// Generators are coordinate tuples reduced modulo the moduli. A generator
/// set that does not generate the group is accepted; the result then has
/// cayley()->generates_group == false.
Graph build_cayley(const std::vector<int>& moduli, const std::vector<std::vector<int>>& generators,
                   int max_nodes = kDefaultMaxNodes);
Graph build_cayley(const CyclicGroup& group, std::vector<int> generators);

/// Lattice sequence member: V_n = [-n, n]^d as Z_{2n+1}^d with generator set
/// S ∩ [-n, n]^d. Scaling studies should start at n large enough that every
/// element of S survives the truncation.
Graph build_lattice_cayley(const std::vector<std::vector<int>>& lattice_generators, int n,
                           int max_nodes = kDefaultMaxNodes);

/// True when the graph is the ring G(Z_N, {-1, 1}) on its natural labelling.
bool is_ring(const Graph& graph);

/// Edge v -> w iff v != w and |m(w, v)| > zero_tol.
Graph graph_of_matrix(const Matrix& m, double zero_tol = 1e-12);

/// Edge-set inclusion on graphs with the same node count.
bool subgraph_of(const Graph& g1, const Graph& g2);

}  // namespace bgossip
