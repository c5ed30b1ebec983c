#include "hlindex/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

#include "hlindex/families.hpp"
#include "hlindex/io.hpp"
#include "hlindex/rng.hpp"

namespace hlindex {

namespace {

Inequality make_inequality(std::string name, double lhs, double rhs) {
  Inequality ineq{std::move(name), lhs, rhs, false};
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  ineq.holds = ineq.margin() >= -kIdentityTol * scale;
  return ineq;
}

// Steps of the sum-of-squares argument for a given eigenvalue sequence
// (index 0 holds lambda_1).
std::vector<Inequality> squares_chain(const std::vector<double>& values, const std::vector<int>& c_set,
                                      const std::vector<int>& d_set, double R) {
  const int n = static_cast<int>(values.size());
  std::vector<char> in_c(n + 1, 0);
  for (int i : c_set) in_c[i] = 1;
  double sq_c = 0.0, abs_c = 0.0, sq_d = 0.0, abs_d = 0.0, sq_not_c = 0.0, sq_all = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double x = values[i - 1];
    sq_all += x * x;
    if (in_c[i]) {
      sq_c += x * x;
      abs_c += std::abs(x);
    } else {
      sq_not_c += x * x;
    }
  }
  for (int i : d_set) {
    sq_d += values[i - 1] * values[i - 1];
    abs_d += std::abs(values[i - 1]);
  }
  const double c = static_cast<double>(c_set.size());
  const double d = static_cast<double>(d_set.size());
  const double combined = c * R * R + (c * R) * (c * R) / d;
  return {
      make_inequality("median_block_squares: sum_C l^2 >= |C| R^2", sq_c, c * R * R),
      make_inequality("outside_median_block: sum_{i not in C} l^2 >= sum_D l^2", sq_not_c, sq_d),
      make_inequality("cauchy_schwarz: sum_D l^2 >= (sum_D |l|)^2 / |D|", sq_d, abs_d * abs_d / d),
      make_inequality("zero_trace_balance: sum_D |l| >= sum_C |l|", abs_d, abs_c),
      make_inequality("median_block_abs: sum_C |l| >= |C| R", abs_c, c * R),
      make_inequality("split_squares: sum l^2 >= sum_C l^2 + sum_D l^2", sq_all, sq_c + sq_d),
      make_inequality("combined: sum_C l^2 + sum_D l^2 >= |C| R^2 + (|C| R)^2 / |D|", sq_c + sq_d, combined),
      make_inequality("final: |C| R^2 + (|C| R)^2 / |D| >= n R^2", combined, n * R * R),
  };
}

}  // namespace

RefinedBound refined_upper_bound(double d, int n) {
  if (n < 2) throw std::invalid_argument("refined_upper_bound: n must be at least 2");
  if (!(d > 0.0) || d > n - 1) throw std::invalid_argument("refined_upper_bound: need 0 < d <= n-1");
  const double radicand = d - d * (d - 1.0) / (n - 1);
  if (radicand < 0.0) return {0.0, true};
  return {std::sqrt(radicand), false};
}

BoundReport bound_report(const Graph& g, double eps) {
  if (g.order() < 2) throw std::invalid_argument("bound_report: need at least 2 vertices");
  const Spectrum spectrum = eigenvalues(g);
  const auto& lam = spectrum.values;
  BoundReport r;
  r.n = g.order();
  r.m = g.edge_count();
  r.max_degree = g.max_degree();
  for (double x : lam) {
    r.trace_sum += x;
    r.square_sum += x * x;
  }
  r.hl = hl_index(spectrum);
  const double R = r.hl.R;
  const int n = r.n;

  if (R <= eps) {
    r.branch = "zero";
  } else if (r.hl.lambda_H > eps && r.hl.lambda_H >= std::abs(r.hl.lambda_L)) {
    r.branch = "lambda_H";
    int l = r.hl.H + 1;
    while (l <= n && lam[l - 1] >= -eps) ++l;
    r.split_index = l;
    for (int i = 1; i <= r.hl.H; ++i) r.c_set.push_back(i);
    for (int i = l; i <= n; ++i) r.d_set.push_back(i);
  } else {
    r.branch = "lambda_L";
    int l = n;
    while (l >= 1 && lam[l - 1] <= eps) --l;
    r.split_index = l;
    for (int i = r.hl.L; i <= n; ++i) r.c_set.push_back(i);
    for (int i = 1; i <= l; ++i) r.d_set.push_back(i);
  }
  if (!r.c_set.empty() && !r.d_set.empty()) {
    r.chain = squares_chain(lam, r.c_set, r.d_set, R);
    std::vector<double> modified = lam;
    modified[0] = R;
    r.modified_chain = squares_chain(modified, r.c_set, r.d_set, R);
    r.chain_holds = std::all_of(r.chain.begin(), r.chain.end(), [](const Inequality& q) { return q.holds; });
  }

  const double m = r.m;
  for (auto [name, d] : {std::pair<const char*, double>{"edges_per_vertex", m / n}, {"mean_valence", 2.0 * m / n}}) {
    DegreeReading reading;
    reading.name = name;
    reading.d = d;
    reading.sqrt_d_bound = std::sqrt(d);
    reading.sqrt_d_holds = R <= reading.sqrt_d_bound + eps;
    if (d > 0.0 && d <= n - 1) {
      const RefinedBound rb = refined_upper_bound(d, n);
      reading.refined_bound = rb.value;
      reading.refined_degenerate = rb.degenerate;
    } else {
      reading.refined_degenerate = true;
    }
    reading.refined_holds = R <= reading.refined_bound + eps;
    reading.degree_sum = make_inequality("n d >= sum l^2", n * d, r.square_sum);
    reading.refined_step = make_inequality("n d >= (n-1) R^2 + d^2", n * d, (n - 1) * R * R + d * d);
    r.readings.push_back(std::move(reading));
  }
  r.sqrt_max_degree = std::sqrt(static_cast<double>(r.max_degree));
  r.max_degree_bound_holds = R <= r.sqrt_max_degree + eps;
  return r;
}

WindowReport median_window(const Spectrum& spectrum, double eps) {
  const int n = spectrum.order();
  const auto [H, L] = hl_indices(n);
  WindowReport w;
  w.n = n;
  w.H = H;
  w.L = L;
  if (H - 1 >= 1) w.lambda_H_minus_1 = spectrum.largest(H - 1);
  if (H + 1 <= n) w.lambda_H_plus_1 = spectrum.largest(H + 1);
  auto inside = [&](int i) { return std::abs(spectrum.largest(i)) <= std::numbers::sqrt2 + eps; };
  if (inside(H) && inside(L)) {
    w.max_halfwidth = 0;
    while (H - w.max_halfwidth - 1 >= 1 && L + w.max_halfwidth + 1 <= n && inside(H - w.max_halfwidth - 1) &&
           inside(L + w.max_halfwidth + 1)) {
      ++w.max_halfwidth;
    }
  }
  w.required_halfwidth = n / 6140;
  w.paper_delta_ok = w.max_halfwidth >= w.required_halfwidth;
  return w;
}

WindowReport median_window(const Graph& g, double eps) { return median_window(eigenvalues(g), eps); }

BallPackingReport ball_packing_count(const Graph& g, const Spectrum& spectrum, int radius, double threshold,
                                     double eps) {
  if (radius < 1) throw std::invalid_argument("ball_packing_count: radius must be at least 1");
  BallPackingReport r;
  r.radius = radius;
  r.threshold = threshold;
  std::vector<char> blocked(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    if (blocked[v]) continue;
    // Later centers must be at distance >= 2r+2 so the balls stay disjoint and non-adjacent.
    const auto dist = bfs_distances(g, v, 2 * radius + 1);
    std::vector<int> members;
    for (int w = 0; w < g.order(); ++w) {
      if (dist[w] < 0) continue;
      blocked[w] = 1;
      if (dist[w] <= radius) members.push_back(w);
    }
    const Spectrum ball_spec = eigenvalues(induced_subgraph(g, members).graph);
    r.centers.push_back(v);
    r.ball_sizes.push_back(static_cast<int>(members.size()));
    r.ball_radii.push_back(ball_spec.largest(1));
    if (ball_spec.largest(1) > threshold + eps) ++r.qualifying;
  }
  r.packed = static_cast<int>(r.centers.size());
  r.direct = static_cast<int>(
      std::count_if(spectrum.values.begin(), spectrum.values.end(), [&](double x) { return x > threshold - eps; }));
  r.holds = r.direct >= r.qualifying;
  return r;
}

BallPackingReport ball_packing_count(const Graph& g, int radius, double threshold, double eps) {
  return ball_packing_count(g, eigenvalues(g), radius, threshold, eps);
}

namespace {

int edges_within(const Graph& g, const std::vector<int>& set) {
  int twice = 0;
  for (int v : set) {
    for (int w : g.neighbors(v)) twice += std::binary_search(set.begin(), set.end(), w);
  }
  return twice / 2;
}

// "K3", "K1,3", "P5" or empty, for a sorted vertex set.
std::string piece_kind(const Graph& g, const std::vector<int>& set) {
  const int size = static_cast<int>(set.size());
  const int edges = edges_within(g, set);
  std::vector<int> deg;
  for (int v : set) {
    int d = 0;
    for (int w : g.neighbors(v)) d += std::binary_search(set.begin(), set.end(), w);
    deg.push_back(d);
  }
  const int top = *std::max_element(deg.begin(), deg.end());
  if (size == 3 && edges == 3) return "K3";
  if (size == 4 && edges == 3 && top == 3) return "K1,3";
  if (size == 5 && edges == 4 && top == 2) return "P5";  // connected by construction
  return {};
}

// Smallest-size, then lexicographically smallest, induced piece containing v
// inside the allowed vertices.
std::optional<std::pair<std::vector<int>, std::string>> find_piece(const Graph& g, int v,
                                                                   const std::vector<char>& allowed) {
  std::set<std::vector<int>> layer{{v}};
  for (int size = 2; size <= 5; ++size) {
    std::set<std::vector<int>> next;
    for (const auto& set : layer) {
      for (int u : set) {
        for (int w : g.neighbors(u)) {
          if (!allowed[w] || std::binary_search(set.begin(), set.end(), w)) continue;
          auto grown = set;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), w), w);
          next.insert(std::move(grown));
        }
      }
    }
    layer = std::move(next);
    if (size < 3) continue;
    for (const auto& set : layer) {
      std::string kind = piece_kind(g, set);
      if (!kind.empty()) return std::make_pair(set, kind);
    }
  }
  return std::nullopt;
}

}  // namespace

ConversePackingReport converse_packing(const Graph& g, const Spectrum& spectrum, double eps) {
  if (g.max_degree() > 3) throw std::invalid_argument("converse_packing: graph is not subcubic");
  ConversePackingReport r;
  for (const auto& comp : components(g)) {
    const int size = static_cast<int>(comp.size());
    int top = 0;
    for (int v : comp) top = std::max(top, g.degree(v));
    if (size <= 4 && edges_within(g, comp) == size - 1 && top <= 2) r.hypothesis_ok = false;
  }
  std::vector<char> allowed(g.order(), 1);
  for (int v = 0; v < g.order(); ++v) {
    if (!allowed[v]) continue;
    auto piece = find_piece(g, v, allowed);
    if (!piece) continue;
    for (int u : piece->first) {
      allowed[u] = 0;
      for (int w : g.neighbors(u)) allowed[w] = 0;
    }
    r.pieces.push_back(std::move(piece->first));
    r.piece_kinds.push_back(std::move(piece->second));
  }
  r.packed = static_cast<int>(r.pieces.size());
  const double root3 = std::sqrt(3.0);
  r.direct_ge_sqrt3 = static_cast<int>(
      std::count_if(spectrum.values.begin(), spectrum.values.end(), [&](double x) { return x >= root3 - eps; }));
  r.target = (g.order() + 29) / 30;
  r.holds = r.direct_ge_sqrt3 >= r.packed;
  return r;
}

ConversePackingReport converse_packing(const Graph& g, double eps) {
  return converse_packing(g, eigenvalues(g), eps);
}

namespace {

class RegularWalker {
 public:
  RegularWalker(int degree, int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
    // Circulant start: i ~ i +- 1..d/2, plus the antipode for odd d.
    for (int i = 0; i < n; ++i) {
      for (int s = 1; s <= degree / 2; ++s) add({i, (i + s) % n});
      if (degree % 2 == 1 && i < n / 2) add({i, i + n / 2});
    }
  }

  Graph graph() const { return Graph::build(n_, edges_); }

  // Rewires ab, cd into ac, bd (or ad, bc). Returns false if the move would
  // break simplicity or connectivity; the walker is unchanged in that case.
  bool try_swap(Rng& rng) {
    if (edges_.size() < 2) return false;
    const std::size_t i = rng.below(edges_.size());
    const std::size_t j = rng.below(edges_.size());
    if (i == j) return false;
    auto [a, b] = edges_[i];
    auto [c, d] = edges_[j];
    if (rng.coin()) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) return false;
    if (linked(a, c) || linked(b, d)) return false;
    set(a, b, 0);
    set(c, d, 0);
    set(a, c, 1);
    set(b, d, 1);
    const Edge old_i = edges_[i];
    const Edge old_j = edges_[j];
    edges_[i] = {std::min(a, c), std::max(a, c)};
    edges_[j] = {std::min(b, d), std::max(b, d)};
    if (connected()) return true;
    set(a, c, 0);
    set(b, d, 0);
    set(a, b, 1);
    set(c, d, 1);
    edges_[i] = old_i;
    edges_[j] = old_j;
    return false;
  }

 private:
  void add(Edge e) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (linked(e.u, e.v)) return;
    set(e.u, e.v, 1);
    edges_.push_back(e);
  }
  bool linked(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  void set(int u, int v, char x) {
    adj_[static_cast<std::size_t>(u) * n_ + v] = x;
    adj_[static_cast<std::size_t>(v) * n_ + u] = x;
  }
  bool connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n_; ++w) {
        if (!seen[w] && linked(v, w)) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  }

  int n_;
  std::vector<char> adj_;
  std::vector<Edge> edges_;
};

}  // namespace

ExtremalReport extremal_search(int degree, int n, int iterations, std::uint64_t seed) {
  const bool feasible = degree >= 1 && n > degree && (static_cast<long long>(degree) * n) % 2 == 0 &&
                        (degree >= 2 || n == 2);
  if (!feasible) {
    throw std::invalid_argument("extremal_search: no connected " + std::to_string(degree) + "-regular graph on " +
                                std::to_string(n) + " vertices");
  }
  if (iterations < 0) throw std::invalid_argument("extremal_search: negative iteration count");
  Rng rng(seed);
  auto fresh_start = [&] {
    RegularWalker walker(degree, n);
    for (int s = 0; s < n * degree; ++s) walker.try_swap(rng);
    return walker;
  };

  ExtremalReport report;
  report.degree = degree;
  report.n = n;
  RegularWalker current = fresh_start();
  double current_R = hl_index(current.graph()).R;
  report.best = current.graph();
  report.best_R = current_R;
  const int patience = std::max(1, iterations / 10);
  int stale = 0;
  for (int it = 0; it < iterations; ++it) {
    RegularWalker proposal = current;
    if (proposal.try_swap(rng)) {
      const Graph candidate = proposal.graph();
      const double R = hl_index(candidate).R;
      if (R >= current_R - 1e-12) {
        current = std::move(proposal);
        current_R = R;
        ++report.accepted_moves;
      }
      if (R > report.best_R + 1e-12) {
        report.best_R = R;
        report.best = candidate;
        stale = -1;
      }
    }
    if (++stale >= patience) {
      current = fresh_start();
      current_R = hl_index(current.graph()).R;
      if (current_R > report.best_R + 1e-12) {
        report.best_R = current_R;
        report.best = current.graph();
      }
      ++report.restarts;
      stale = 0;
    }
    report.trajectory.push_back(report.best_R);
  }
  return report;
}

namespace {

class Kuratowski33Search {
 public:
  explicit Kuratowski33Search(const Graph& g) : g_(g), role_(g.order(), kFree) {}

  bool found() {
    std::vector<int> cubic;
    for (int v = 0; v < g_.order(); ++v) {
      if (g_.degree(v) == 3) cubic.push_back(v);
    }
    const int c = static_cast<int>(cubic.size());
    if (c < 6) return false;
    std::vector<int> pick(6);
    // Enumerate 6-subsets, then the 10 ways to split them into two triples
    // with the smallest vertex on the first side.
    std::vector<int> idx{0, 1, 2, 3, 4, 5};
    for (;;) {
      for (int i = 0; i < 6; ++i) pick[i] = cubic[idx[i]];
      for (int x = 1; x < 6; ++x) {
        for (int y = x + 1; y < 6; ++y) {
          a_ = {pick[0], pick[x], pick[y]};
          b_.clear();
          for (int i = 1; i < 6; ++i) {
            if (i != x && i != y) b_.push_back(pick[i]);
          }
          if (route_all()) return true;
        }
      }
      int i = 5;
      while (i >= 0 && idx[i] == c - 6 + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < 6; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
  }

 private:
  static constexpr int kFree = -1;
  static constexpr int kUsed = -2;

  bool route_all() {
    std::fill(role_.begin(), role_.end(), kFree);
    for (int i = 0; i < 3; ++i) role_[a_[i]] = i;        // 0..2: side-a branch
    for (int j = 0; j < 3; ++j) role_[b_[j]] = 10 + j;   // 10..12: side-b branch
    connected_ = {};
    stubs_.clear();
    for (int i = 0; i < 3; ++i) {
      for (int w : g_.neighbors(a_[i])) stubs_.push_back({i, w});
    }
    return route(0);
  }

  bool route(std::size_t stub) {
    if (stub == stubs_.size()) return true;
    const auto [i, first] = stubs_[stub];
    return walk(stub, i, a_[i], first);
  }

  // Extends the path of `stub` (from branch a_i) from `prev` into `at`.
  bool walk(std::size_t stub, int i, int prev, int at) {
    const int role = role_[at];
    if (role >= 10) {
      const int j = role - 10;
      if (connected_[i][j]) return false;
      connected_[i][j] = true;
      if (route(stub + 1)) return true;
      connected_[i][j] = false;
      return false;
    }
    if (role != kFree) return false;
    role_[at] = kUsed;
    for (int next : g_.neighbors(at)) {
      if (next == prev) continue;
      if (walk(stub, i, at, next)) return true;
    }
    role_[at] = kFree;
    return false;
  }

  const Graph& g_;
  std::vector<int> role_;
  std::vector<int> a_;
  std::vector<int> b_;
  std::array<std::array<bool, 3>, 3> connected_{};
  std::vector<std::pair<int, int>> stubs_;
};

}  // namespace

bool is_planar_subcubic(const Graph& g, int limit) {
  if (g.max_degree() > 3) throw std::invalid_argument("is_planar_subcubic: graph is not subcubic");
  if (g.order() > limit) {
    throw std::invalid_argument("is_planar_subcubic: n = " + std::to_string(g.order()) + " exceeds the limit " +
                                std::to_string(limit));
  }
  if (g.order() >= 3 && g.edge_count() > 3 * g.order() - 6) return false;
  return !Kuratowski33Search(g).found();
}

ConjectureScanReport scan_planar(std::span<const Graph> graphs, double flag_threshold, double eps) {
  ConjectureScanReport report;
  report.flag_threshold = flag_threshold;
  std::map<int, ScanRow> rows;
  for (const Graph& g : graphs) {
    ScanRow& row = rows[g.order()];
    row.n = g.order();
    ++row.graphs;
    report.n_max = std::max(report.n_max, g.order());
    if (g.max_degree() > 3 || g.order() > kPlanarityLimit || !is_planar_subcubic(g)) continue;
    ++row.planar;
    const double R = hl_index(g).R;
    if (row.argmax.empty() || R > row.max_R) {
      row.max_R = R;
      row.argmax = encode_graph6(g);
    }
    if (g.order() == 4 && g.edge_count() == 6) {
      report.k4_seen = true;
      report.k4_R = R;
    }
    if (R > flag_threshold + eps) report.flagged.push_back({encode_graph6(g), R});
  }
  for (auto& [n, row] : rows) report.rows.push_back(row);
  return report;
}

ConjectureScanReport conjecture_scan(int n_max, double flag_threshold, double eps) {
  if (n_max < 1 || n_max > kEnumerationLimit) {
    throw std::invalid_argument("conjecture_scan: n_max must be in [1, " + std::to_string(kEnumerationLimit) + "]");
  }
  std::vector<Graph> graphs;
  for (int n = 1; n <= n_max; ++n) {
    auto level = enumerate_subcubic(n, true);
    std::move(level.begin(), level.end(), std::back_inserter(graphs));
  }
  ConjectureScanReport report = scan_planar(graphs, flag_threshold, eps);
  report.n_max = n_max;
  return report;
}

}  // namespace hlindex
