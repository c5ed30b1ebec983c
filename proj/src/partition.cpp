#include "hlindex/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "hlindex/rng.hpp"

namespace hlindex {

Bipartition Bipartition::from_string(std::string_view labels) {
  std::vector<Side> sides;
  sides.reserve(labels.size());
  for (char c : labels) {
    if (c == 'A') {
      sides.push_back(Side::A);
    } else if (c == 'B') {
      sides.push_back(Side::B);
    } else {
      throw std::invalid_argument(std::string("bipartition: unexpected label '") + c + "'");
    }
  }
  return Bipartition(std::move(sides));
}

int Bipartition::count(Side s) const {
  return static_cast<int>(std::count(sides_.begin(), sides_.end(), s));
}

std::vector<int> Bipartition::members(Side s) const {
  std::vector<int> out;
  for (int v = 0; v < order(); ++v) {
    if (sides_[v] == s) out.push_back(v);
  }
  return out;
}

std::string Bipartition::to_string() const {
  std::string out;
  out.reserve(sides_.size());
  for (Side s : sides_) out.push_back(to_char(s));
  return out;
}

namespace {

void require_labels(const Graph& g, const Bipartition& p) {
  if (p.order() != g.order()) throw std::invalid_argument("partition does not label every vertex");
}

void require_subcubic(const Graph& g, const char* what) {
  if (g.max_degree() > 3) {
    throw std::invalid_argument(std::string(what) + ": graph is not subcubic (max degree " +
                                std::to_string(g.max_degree()) + ")");
  }
}

int same_side_degree(const Graph& g, const Bipartition& p, int v) {
  int same = 0;
  for (int w : g.neighbors(v)) same += p[w] == p[v];
  return same;
}

// Component of v inside its own side, if it has at most `cap` vertices.
// Returns false as soon as the component grows past the cap.
bool small_side_component(const Graph& g, const Bipartition& p, int v, int cap, std::vector<int>& out) {
  out.assign(1, v);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int w : g.neighbors(out[i])) {
      if (p[w] != p[v] || std::find(out.begin(), out.end(), w) != out.end()) continue;
      out.push_back(w);
      if (static_cast<int>(out.size()) > cap) return false;
    }
  }
  return true;
}

bool is_short_path_component(const Graph& g, const Bipartition& p, int v, std::vector<int>& scratch) {
  if (!small_side_component(g, p, v, 3, scratch)) return false;
  int twice_edges = 0;
  for (int u : scratch) twice_edges += same_side_degree(g, p, u);
  return twice_edges / 2 == static_cast<int>(scratch.size()) - 1;
}

}  // namespace

int cut_size(const Graph& g, const Bipartition& p) {
  require_labels(g, p);
  int cut = 0;
  for (const Edge& e : g.edges()) cut += p[e.u] != p[e.v];
  return cut;
}

bool is_unfriendly(const Graph& g, const Bipartition& p) {
  require_labels(g, p);
  for (int v = 0; v < g.order(); ++v) {
    if (2 * same_side_degree(g, p, v) > g.degree(v)) return false;
  }
  return true;
}

bool is_nice(const Graph& g, const Bipartition& p) {
  require_labels(g, p);
  std::vector<char> seen(g.order(), 0);
  std::vector<int> comp;
  for (int v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    if (!is_short_path_component(g, p, v, comp)) return false;
    for (int u : comp) seen[u] = 1;
  }
  return true;
}

LocalSearchTrace unfriendly_search_traced(const Graph& g, std::uint64_t seed) {
  const int n = g.order();
  Rng rng(seed);
  std::vector<Side> sides(n);
  for (auto& s : sides) s = rng.coin() ? Side::B : Side::A;
  LocalSearchTrace trace{Bipartition(std::move(sides)), {}};
  Bipartition& p = trace.partition;

  std::vector<int> same(n);
  for (int v = 0; v < n; ++v) same[v] = same_side_degree(g, p, v);
  int cut = cut_size(g, p);
  trace.cut_trajectory.push_back(cut);

  for (;;) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (2 * same[v] > g.degree(v)) pick = v;
    }
    if (pick < 0) break;
    for (int w : g.neighbors(pick)) same[w] += p[w] == p[pick] ? -1 : 1;
    cut += 2 * same[pick] - g.degree(pick);
    same[pick] = g.degree(pick) - same[pick];
    p.flip(pick);
    trace.cut_trajectory.push_back(cut);
  }
  return trace;
}

Bipartition unfriendly_search(const Graph& g, std::uint64_t seed) {
  return unfriendly_search_traced(g, seed).partition;
}

std::vector<int> unstable_vertices(const Graph& g, const Bipartition& p) {
  if (!is_nice(g, p)) throw std::invalid_argument("unstable_vertices: partition is not nice");
  std::vector<int> out;
  std::vector<int> comp;
  Bipartition flipped = p;
  for (int v = 0; v < g.order(); ++v) {
    // Leaving a short path only splits it; the new component of v decides.
    flipped.flip(v);
    if (is_short_path_component(g, flipped, v, comp)) out.push_back(v);
    flipped.flip(v);
  }
  return out;
}

namespace {

struct NiceSearch {
  std::optional<Bipartition> unbalanced;
  std::vector<Bipartition> balanced;  // nice, balanced, no unstable vertex
  int restarts = 0;
};

// Random walk over balanced nice partitions by swapping a vertex from each side,
// stopping at the first partition with an unstable vertex.
std::optional<Bipartition> swap_walk(const Graph& g, Bipartition p, std::uint64_t seed) {
  const int n = g.order();
  Rng rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int step = 0; step < 4 * n; ++step) {
    const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i + 1))]);
    p.flip(u);
    bool moved = false;
    for (int w : order) {
      if (p[w] != p[u] || w == u) continue;
      p.flip(w);
      if (is_nice(g, p)) {
        moved = true;
        break;
      }
      p.flip(w);
    }
    if (!moved) {
      p.flip(u);
      continue;
    }
    const auto unstable = unstable_vertices(g, p);
    if (!unstable.empty()) {
      p.flip(unstable.front());
      return p;
    }
  }
  return std::nullopt;
}

NiceSearch search_nice(const Graph& g, int budget, std::uint64_t seed) {
  NiceSearch out;
  for (int r = 0; r < budget; ++r) {
    out.restarts = r + 1;
    Bipartition p = unfriendly_search(g, Rng::derive(seed, static_cast<std::uint64_t>(r)));
    if (!is_nice(g, p)) continue;
    if (p.count(Side::A) != p.count(Side::B)) {
      out.unbalanced = std::move(p);
      return out;
    }
    const auto unstable = unstable_vertices(g, p);
    if (!unstable.empty()) {
      p.flip(unstable.front());
      out.unbalanced = std::move(p);
      return out;
    }
    if (std::find(out.balanced.begin(), out.balanced.end(), p) == out.balanced.end()) {
      out.balanced.push_back(p);
    }
    if (auto found = swap_walk(g, std::move(p), Rng::derive(~seed, static_cast<std::uint64_t>(r)))) {
      out.unbalanced = std::move(found);
      return out;
    }
  }
  return out;
}

// Induced cycles of length 3..5, each listed once starting at its minimum
// vertex, in lexicographic order.
std::vector<std::vector<int>> short_induced_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  auto chordless = [&](const std::vector<int>& cyc) {
    const int len = static_cast<int>(cyc.size());
    for (int i = 0; i < len; ++i) {
      for (int j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;
        if (g.adjacent(cyc[i], cyc[j])) return false;
      }
    }
    return true;
  };
  auto extend = [&](auto&& self) -> void {
    const int last = path.back();
    const int len = static_cast<int>(path.size());
    if (len >= 3 && path[1] < path.back() && g.adjacent(last, path.front()) && chordless(path)) {
      out.push_back(path);
    }
    if (len == 5) return;
    int prev = -1;
    for (int w : g.neighbors(last)) {
      if (w == prev) continue;
      prev = w;
      if (w <= path.front() || std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      self(self);
      path.pop_back();
    }
  };
  for (int s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    extend(extend);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> path_spectrum(int vertices) {
  switch (vertices) {
    case 1: return {0.0};
    case 2: return {1.0, -1.0};
    default: return {std::numbers::sqrt2, 0.0, -std::numbers::sqrt2};
  }
}

}  // namespace

std::optional<Bipartition> find_unbalanced_nice(const Graph& g, int budget, std::uint64_t seed) {
  require_subcubic(g, "find_unbalanced_nice");
  return search_nice(g, budget, seed).unbalanced;
}

CertificateCheck verify_certificate(const Graph& g, const Certificate& cert, const CertifyOptions& options) {
  CertificateCheck check;
  check.k = cert.k;
  if (cert.partition.order() != g.order()) {
    check.failures.push_back("partition labels " + std::to_string(cert.partition.order()) + " vertices, graph has " +
                             std::to_string(g.order()));
    return check;
  }
  if (cert.k < 1 || cert.k > options.max_k) {
    check.failures.push_back("depth k = " + std::to_string(cert.k) + " outside [1, " +
                             std::to_string(options.max_k) + "]");
    return check;
  }
  const std::vector<int> big = cert.partition.members(cert.big_side);
  check.b_size = static_cast<int>(big.size());
  check.a_size = g.order() - check.b_size;
  check.H = hl_indices(g.order()).H;
  // H >= |A| + k, i.e. |B| >= |A| + 2k - 1 (the same as |B| >= |A| + 2k for even n).
  if (check.H < check.a_size + cert.k) {
    check.failures.push_back("unbalance: |B| - |A| = " + std::to_string(check.b_size - check.a_size) +
                             " but the index chain needs H = " + std::to_string(check.H) + " >= |A| + k = " +
                             std::to_string(check.a_size + cert.k) + " (margin " +
                             std::to_string(check.H - check.a_size - cert.k) + ")");
    return check;
  }

  const RelabeledGraph side = induced_subgraph(g, big);
  const auto comps = components(side.graph);
  std::vector<char> exceptional(comps.size(), 0);
  for (int id : cert.exceptional) {
    if (id < 0 || id >= static_cast<int>(comps.size())) {
      check.failures.push_back("exceptional component id " + std::to_string(id) + " out of range [0, " +
                               std::to_string(comps.size()) + ")");
      continue;
    }
    if (exceptional[id]) check.failures.push_back("exceptional component id " + std::to_string(id) + " repeated");
    exceptional[id] = 1;
  }

  std::vector<double> values;
  values.reserve(big.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& members = comps[c];
    int twice_edges = 0;
    for (int v : members) twice_edges += side.graph.degree(v);
    const int size = static_cast<int>(members.size());
    const bool short_path = size <= 3 && twice_edges / 2 == size - 1;
    if (short_path) {
      const auto spec = path_spectrum(size);
      values.insert(values.end(), spec.begin(), spec.end());
      continue;
    }
    if (!exceptional[c]) {
      check.failures.push_back("component " + std::to_string(c) + " (" + std::to_string(size) + " vertices, " +
                               std::to_string(twice_edges / 2) +
                               " edges) is not a path with at most 2 edges and is not marked exceptional");
    }
    const auto spec = eigenvalues(induced_subgraph(side.graph, members).graph);
    values.insert(values.end(), spec.values.begin(), spec.values.end());
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  const Spectrum spectrum{std::move(values)};
  check.upper = spectrum.largest(cert.k);
  check.lower = spectrum.smallest(cert.k);
  check.upper_margin = std::numbers::sqrt2 - check.upper;
  check.lower_margin = check.lower + std::numbers::sqrt2;
  check.upper_outcome = classify(check.upper_margin, options.eps);
  check.lower_outcome = classify(check.lower_margin, options.eps);
  if (check.upper_outcome == Outcome::Fail) {
    check.failures.push_back("lambda_k(G(B)) = " + std::to_string(check.upper) + " exceeds sqrt 2 (margin " +
                             std::to_string(check.upper_margin) + ")");
  }
  if (check.lower_outcome == Outcome::Fail) {
    check.failures.push_back("lambda_k^-(G(B)) = " + std::to_string(check.lower) + " below -sqrt 2 (margin " +
                             std::to_string(check.lower_margin) + ")");
  }
  check.accepted = check.failures.empty();
  return check;
}

CertifyResult certify(const Graph& g, int budget, std::uint64_t seed, const CertifyOptions& options) {
  require_subcubic(g, "certify");
  CertifyResult result;
  if (g.order() == 0) {
    result.method = "unknown";
    return result;
  }
  NiceSearch search = search_nice(g, budget, seed);
  result.restarts = search.restarts;
  if (search.unbalanced) {
    const Bipartition& p = *search.unbalanced;
    Certificate cert{p, p.count(Side::B) > p.count(Side::A) ? Side::B : Side::A, 1, {}};
    if (verify_certificate(g, cert, options).accepted) {
      result.certificate = std::move(cert);
      result.method = "unbalanced-nice";
      return result;
    }
  }

  // Widening: push the vertices of a short induced cycle (optionally with the
  // outside vertices seeing two of its vertices) into one part, and let the
  // oversized components it creates be exceptional.
  const auto cycles = short_induced_cycles(g);
  for (const Bipartition& base : search.balanced) {
    for (const auto& cycle : cycles) {
      std::vector<int> hub;
      for (int v = 0; v < g.order(); ++v) {
        if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) continue;
        int seen = 0;
        for (int c : cycle) seen += g.adjacent(v, c);
        if (seen >= 2) hub.push_back(v);
      }
      for (int variant = 0; variant < (hub.empty() ? 1 : 2); ++variant) {
        for (Side big : {Side::B, Side::A}) {
          Bipartition p = base;
          for (int v : cycle) p.set(v, big);
          if (variant == 1) {
            for (int v : hub) p.set(v, big);
          }
          const std::vector<int> members = p.members(big);
          const int b = static_cast<int>(members.size());
          const int a = g.order() - b;
          const auto comps = components(induced_subgraph(g, members).graph);
          std::vector<int> exceptional;
          for (std::size_t c = 0; c < comps.size(); ++c) {
            const int size = static_cast<int>(comps[c].size());
            int twice_edges = 0;
            for (int v : comps[c]) {
              for (int w : g.neighbors(v)) twice_edges += p[w] == big;
            }
            if (size > 3 || twice_edges / 2 != size - 1) exceptional.push_back(static_cast<int>(c));
          }
          for (int k = 1; k <= options.max_k && 2 * (a + k) <= a + b + 1; ++k) {
            Certificate cert{p, big, k, exceptional};
            if (verify_certificate(g, cert, options).accepted) {
              result.certificate = std::move(cert);
              result.method = "widened-cycle";
              return result;
            }
          }
        }
      }
    }
  }
  result.method = "unknown";
  return result;
}

std::string write_certificate(const Certificate& cert) {
  std::string out = std::to_string(cert.partition.order()) + ' ' + std::to_string(cert.k) + ' ' +
                    to_char(cert.big_side) + '\n' + cert.partition.to_string() + '\n';
  std::vector<int> ids = cert.exceptional;
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ids[i]);
  }
  out += '\n';
  return out;
}

Certificate parse_certificate(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) throw CertificateFormatError("certificate: last line lacks a newline");
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.size() != 3) {
    throw CertificateFormatError("certificate: expected 3 lines, found " + std::to_string(lines.size()));
  }
  std::istringstream header{std::string(lines[0])};
  long long n = -1;
  int k = 0;
  std::string side;
  std::string extra;
  if (!(header >> n >> k >> side) || (header >> extra) || n < 0 || (side != "A" && side != "B")) {
    throw CertificateFormatError("certificate: line 1 must be \"n k A|B\"");
  }
  if (static_cast<long long>(lines[1].size()) != n) {
    throw CertificateFormatError("certificate: line 2 has " + std::to_string(lines[1].size()) + " labels, expected " +
                                 std::to_string(n));
  }
  Certificate cert;
  try {
    cert.partition = Bipartition::from_string(lines[1]);
  } catch (const std::invalid_argument& e) {
    throw CertificateFormatError(std::string("certificate: line 2: ") + e.what());
  }
  cert.k = k;
  cert.big_side = side == "A" ? Side::A : Side::B;
  std::istringstream ids{std::string(lines[2])};
  int id = 0;
  while (ids >> id) cert.exceptional.push_back(id);
  if (!ids.eof()) throw CertificateFormatError("certificate: line 3 must list integer component ids");
  if (write_certificate(cert) != text) {
    throw CertificateFormatError("certificate: not in canonical form (single spaces, sorted ids, no padding)");
  }
  return cert;
}

}  // namespace hlindex
