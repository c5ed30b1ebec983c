#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlindex {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Largest edge multiplicity a multigraph may carry.
inline constexpr int kMaxMultiplicity = 3;

/// Loop-free undirected graph or multigraph on vertices 0..n-1.
///
/// Neighbor lists are sorted and repeat a neighbor once per parallel edge, so
/// degree(v) counts edges with multiplicity. Graphs are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Rejects loops, out-of-range endpoints, repeated pairs when
  /// `allow_parallel` is false and multiplicities above kMaxMultiplicity.
  static Graph build(int n, std::span<const Edge> edges, bool allow_parallel = false);
  static Graph build(int n, std::initializer_list<Edge> edges, bool allow_parallel = false) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()), allow_parallel);
  }

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }
  bool allows_parallel() const { return allow_parallel_; }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  int multiplicity(int u, int v) const;
  bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }
  std::span<const int> neighbors(int v) const { return adj_[v]; }

  /// True when no pair carries more than one edge.
  bool is_simple() const;

  /// |E|/|V|, the convention used for the average-degree bound.
  double average_degree() const;
  /// 2|E|/|V|, the arithmetic mean of the vertex degrees.
  double mean_valence() const;

  /// Edges with u < v, lexicographically sorted, repeated per multiplicity.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
  bool allow_parallel_ = false;
};

/// A graph derived from another one together with the vertex correspondence.
/// old_to_new[v] is -1 for deleted vertices.
struct RelabeledGraph {
  Graph graph;
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;
};

RelabeledGraph induced_subgraph(const Graph& g, std::span<const int> keep);

/// (G - remove) + add. Added pairs are given in G's numbering; the result
/// always allows parallel edges.
RelabeledGraph surgery(const Graph& g, std::span<const int> remove, std::span<const Edge> add);

/// Merges u and v into one vertex (placed at index min(u, v)); edges between
/// u and v would become loops and are dropped, parallel edges are kept.
RelabeledGraph identify(const Graph& g, int u, int v);

/// Vertices at distance <= radius from v, ascending.
std::vector<int> ball(const Graph& g, int v, int radius);

/// Breadth-first distances from source, -1 where unreachable or beyond max_depth
/// (max_depth < 0 means unbounded).
std::vector<int> bfs_distances(const Graph& g, int source, int max_depth = -1);

/// Connected components, each ascending, ordered by their minimum vertex.
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

inline constexpr int kCanonicalLimit = 10;
// Canonical codes are packed into 64 bits, which caps n at 11.
inline constexpr int kCanonicalHardLimit = 11;

/// Canonical form of a simple graph: the lexicographically smallest
/// upper-triangle adjacency bitstring (column order as in graph6) over all
/// vertex orderings that list vertices by nonincreasing degree. Two graphs
/// get equal codes iff they are isomorphic. The returned string holds n
/// followed by the packed bits.
std::string canonical_code(const Graph& g, int limit = kCanonicalLimit);

/// Same search, returning the packed bitstring (bit for the first pair is the
/// most significant of the n(n-1)/2 used bits) and the optimal ordering.
struct CanonicalForm {
  std::uint64_t bits = 0;
  std::vector<int> order;  // order[position] = original vertex
};
CanonicalForm canonical_form(const Graph& g, int limit = kCanonicalLimit);

}  // namespace hlindex
