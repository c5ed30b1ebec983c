#include "hlindex/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hlindex {

namespace {

void check_vertex(const Graph& g, int v, const char* what) {
  if (v < 0 || v >= g.order()) {
    throw GraphError(std::string(what) + ": vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(g.order()) + ")");
  }
}

}  // namespace

Graph Graph::build(int n, std::span<const Edge> edges, bool allow_parallel) {
  if (n < 0) throw GraphError("build: negative vertex count");
  Graph g;
  g.adj_.resize(n);
  g.allow_parallel_ = allow_parallel;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("build: edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw GraphError("build: loop at vertex " + std::to_string(e.u));
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    auto& row = g.adj_[v];
    std::sort(row.begin(), row.end());
    for (auto it = row.begin(); it != row.end();) {
      auto end = std::upper_bound(it, row.end(), *it);
      const auto mult = end - it;
      if (mult > 1 && !allow_parallel) {
        throw GraphError("build: repeated pair (" + std::to_string(std::min(v, *it)) + "," +
                         std::to_string(std::max(v, *it)) + ") in a simple graph");
      }
      if (mult > kMaxMultiplicity) {
        throw GraphError("build: multiplicity " + std::to_string(mult) + " exceeds " +
                         std::to_string(kMaxMultiplicity));
      }
      it = end;
    }
  }
  g.m_ = static_cast<int>(edges.size());
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& row : adj_) best = std::max(best, static_cast<int>(row.size()));
  return best;
}

int Graph::multiplicity(int u, int v) const {
  const auto& row = adj_[u];
  auto [lo, hi] = std::equal_range(row.begin(), row.end(), v);
  return static_cast<int>(hi - lo);
}

bool Graph::is_simple() const {
  for (const auto& row : adj_) {
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) return false;
  }
  return true;
}

double Graph::average_degree() const {
  return order() == 0 ? 0.0 : static_cast<double>(m_) / order();
}

double Graph::mean_valence() const {
  return order() == 0 ? 0.0 : 2.0 * m_ / order();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

RelabeledGraph induced_subgraph(const Graph& g, std::span<const int> keep) {
  RelabeledGraph out;
  out.old_to_new.assign(g.order(), -1);
  for (int v : keep) {
    check_vertex(g, v, "induced_subgraph");
    out.old_to_new[v] = 0;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (out.old_to_new[v] == 0) {
      out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    } else {
      out.old_to_new[v] = -1;
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = out.old_to_new[e.u];
    const int b = out.old_to_new[e.v];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  out.graph = Graph::build(static_cast<int>(out.new_to_old.size()), edges, g.allows_parallel());
  return out;
}

RelabeledGraph surgery(const Graph& g, std::span<const int> remove, std::span<const Edge> add) {
  std::vector<char> removed(g.order(), 0);
  for (int v : remove) {
    check_vertex(g, v, "surgery");
    removed[v] = 1;
  }
  for (const Edge& e : add) {
    check_vertex(g, e.u, "surgery");
    check_vertex(g, e.v, "surgery");
    if (removed[e.u] || removed[e.v]) {
      throw GraphError("surgery: added pair (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") touches a deleted vertex");
    }
  }
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  RelabeledGraph out = induced_subgraph(g, keep);
  std::vector<Edge> edges = out.graph.edges();
  for (const Edge& e : add) edges.push_back({out.old_to_new[e.u], out.old_to_new[e.v]});
  out.graph = Graph::build(out.graph.order(), edges, true);
  return out;
}

RelabeledGraph identify(const Graph& g, int u, int v) {
  check_vertex(g, u, "identify");
  check_vertex(g, v, "identify");
  if (u == v) throw GraphError("identify: cannot identify a vertex with itself");
  const int keep = std::min(u, v);
  const int drop = std::max(u, v);
  RelabeledGraph out;
  out.old_to_new.resize(g.order());
  for (int w = 0, next = 0; w < g.order(); ++w) {
    if (w == drop) continue;
    out.old_to_new[w] = next++;
    out.new_to_old.push_back(w);
  }
  out.old_to_new[drop] = out.old_to_new[keep];
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = out.old_to_new[e.u];
    const int b = out.old_to_new[e.v];
    if (a != b) edges.push_back({a, b});
  }
  out.graph = Graph::build(g.order() - 1, edges, true);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source, int max_depth) {
  check_vertex(g, source, "bfs_distances");
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (max_depth >= 0 && dist[v] == max_depth) continue;
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> ball(const Graph& g, int v, int radius) {
  if (radius < 0) throw GraphError("ball: negative radius");
  const auto dist = bfs_distances(g, v, radius);
  std::vector<int> out;
  for (int w = 0; w < g.order(); ++w) {
    if (dist[w] >= 0) out.push_back(w);
  }
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members{s};
    label[s] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int w : g.neighbors(members[i])) {
        if (label[w] < 0) {
          label[w] = id;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || components(g).size() == 1;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph::build(a.order() + b.order(), edges, a.allows_parallel() || b.allows_parallel());
}

Graph permute(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("permute: size mismatch");
  std::vector<char> seen(g.order(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.order() || seen[p]) throw GraphError("permute: not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph::build(g.order(), edges, g.allows_parallel());
}

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()), rows_(g.order(), 0) {
    for (int v = 0; v < n_; ++v) {
      for (int w : g.neighbors(v)) rows_[v] |= 1u << w;
      degree_.push_back(g.degree(v));
    }
    class_degree_ = degree_;
    std::sort(class_degree_.begin(), class_degree_.end(), std::greater<>());
    total_bits_ = n_ * (n_ - 1) / 2;
    order_.resize(n_);
  }

  CanonicalForm run() {
    descend(0, 0, 0);
    return {best_, best_order_};
  }

 private:
  bool twins(int u, int w) const {
    return (rows_[u] & ~(1u << w)) == (rows_[w] & ~(1u << u));
  }

  void descend(int depth, std::uint64_t prefix, std::uint32_t placed) {
    if (depth == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    // Column `depth` of the code: adjacency of the new vertex to the placed ones.
    std::uint64_t min_column = UINT64_MAX;
    int candidates[kCanonicalHardLimit];
    std::uint64_t columns[kCanonicalHardLimit];
    int count = 0;
    for (int w = 0; w < n_; ++w) {
      if ((placed >> w) & 1u || degree_[w] != class_degree_[depth]) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < depth; ++i) column = (column << 1) | ((rows_[order_[i]] >> w) & 1u);
      candidates[count] = w;
      columns[count] = column;
      ++count;
      min_column = std::min(min_column, column);
    }
    const std::uint64_t next_prefix = (prefix << depth) | min_column;
    if (have_best_) {
      const int shift = total_bits_ - (depth + 1) * depth / 2;
      const std::uint64_t best_prefix = shift >= 64 ? 0 : best_ >> shift;
      if (next_prefix > best_prefix) return;
    }
    int kept[kCanonicalHardLimit];
    int kept_count = 0;
    for (int c = 0; c < count; ++c) {
      if (columns[c] != min_column) continue;
      const int w = candidates[c];
      bool duplicate = false;
      for (int k = 0; k < kept_count && !duplicate; ++k) duplicate = twins(kept[k], w);
      if (!duplicate) kept[kept_count++] = w;
    }
    for (int k = 0; k < kept_count; ++k) {
      order_[depth] = kept[k];
      descend(depth + 1, next_prefix, placed | (1u << kept[k]));
    }
  }

  int n_;
  std::vector<std::uint32_t> rows_;
  std::vector<int> degree_;
  std::vector<int> class_degree_;
  int total_bits_ = 0;
  std::vector<int> order_;
  std::uint64_t best_ = 0;
  std::vector<int> best_order_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int limit) {
  limit = std::min(limit, kCanonicalHardLimit);
  if (g.order() > limit) {
    throw GraphError("canonical_code: n = " + std::to_string(g.order()) + " exceeds the limit " +
                     std::to_string(limit));
  }
  if (!g.is_simple()) throw GraphError("canonical_code: multigraphs are not supported");
  if (g.order() == 0) return {};
  return CanonicalSearch(g).run();
}

std::string canonical_code(const Graph& g, int limit) {
  const CanonicalForm form = canonical_form(g, limit);
  const int n = g.order();
  const int bits = n * (n - 1) / 2;
  std::string out(1, static_cast<char>(n));
  for (int byte = 0; byte * 8 < bits; ++byte) {
    std::uint8_t value = 0;
    for (int b = 0; b < 8; ++b) {
      const int t = byte * 8 + b;
      const int bit = t < bits ? static_cast<int>((form.bits >> (bits - 1 - t)) & 1u) : 0;
      value = static_cast<std::uint8_t>((value << 1) | bit);
    }
    out.push_back(static_cast<char>(value));
  }
  return out;
}

}  // namespace hlindex
