#include "hlindex/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <stdexcept>

#include "hlindex/rng.hpp"

namespace hlindex {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<int>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mod_inverse(int a, int p) {
  for (int x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw std::logic_error("mod_inverse: not invertible");
}

// Remainder of a modulo a nonzero b over GF(p).
Poly poly_mod(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  const int lead_inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const int factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(int value, int p, int len) {
  Poly out(len);
  for (int i = 0; i < len; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

int from_digits(const Poly& d, int p) {
  int value = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) value = value * p + d[i];
  return value;
}

}  // namespace

bool is_irreducible(std::span<const int> monic, int p) {
  const int deg = static_cast<int>(monic.size()) - 1;
  if (deg < 1) return false;
  const Poly f(monic.begin(), monic.end());
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly divisor = digits(low, p, d);
      divisor.push_back(1);
      if (poly_mod(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

GaloisField GaloisField::build(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("field: " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("field: extension degree must be at least 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 65536) throw std::invalid_argument("field: order p^k exceeds 2^16");
  }
  GaloisField f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<int>(q);
  for (int low = 0; low < f.q_; ++low) {
    Poly candidate = digits(low, p, k);
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) {
      f.modulus_ = std::move(candidate);
      break;
    }
  }

  auto raw_mul = [&](int a, int b) {
    const Poly x = digits(a, p, k);
    const Poly y = digits(b, p, k);
    Poly prod(2 * k, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    }
    Poly r = poly_mod(prod, f.modulus_, p);
    r.resize(k, 0);
    return from_digits(r, p);
  };

  // Log tables from the first primitive element.
  const int order = f.q_ - 1;
  for (int g = 1; g < f.q_; ++g) {
    std::vector<int> powers{1};
    int x = 1;
    for (int i = 1; i < order; ++i) {
      x = raw_mul(x, g);
      if (x == 1) break;
      powers.push_back(x);
    }
    if (static_cast<int>(powers.size()) != order) continue;
    f.exp_.resize(2 * static_cast<std::size_t>(order));
    f.log_.assign(f.q_, -1);
    for (int i = 0; i < 2 * order; ++i) f.exp_[i] = powers[i % order];
    for (int i = 0; i < order; ++i) f.log_[powers[i]] = i;
    break;
  }
  return f;
}

int GaloisField::add(int a, int b) const {
  if (p_ == 2) return a ^ b;
  int out = 0;
  int scale = 1;
  while (a > 0 || b > 0) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

int GaloisField::neg(int a) const {
  if (p_ == 2) return a;
  int out = 0;
  int scale = 1;
  while (a > 0) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

int GaloisField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

int GaloisField::inv(int a) const {
  if (a == 0) throw std::domain_error("field: zero has no inverse");
  const int order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

Graph pg2_incidence(int p, int k) {
  const GaloisField field = GaloisField::build(p, k);
  const int q = field.size();
  std::vector<std::array<int, 3>> coords;
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      for (int z = 0; z < q; ++z) {
        const int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) coords.push_back({x, y, z});
      }
    }
  }
  const int count = static_cast<int>(coords.size());
  std::vector<Edge> edges;
  for (int pt = 0; pt < count; ++pt) {
    for (int ln = 0; ln < count; ++ln) {
      int dot = 0;
      for (int i = 0; i < 3; ++i) dot = field.add(dot, field.mul(coords[pt][i], coords[ln][i]));
      if (dot == 0) edges.push_back({pt, count + ln});
    }
  }
  return Graph::build(2 * count, edges);
}

Graph cycle_with_pendants(std::span<const int> lengths) {
  const int k = static_cast<int>(lengths.size());
  if (k < 3) throw std::invalid_argument("cycle_with_pendants: need at least 3 cycle vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  int next = k;
  for (int i = 0; i < k; ++i) {
    if (lengths[i] < 0) throw std::invalid_argument("cycle_with_pendants: negative path length");
    int prev = i;
    for (int j = 0; j < lengths[i]; ++j) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Graph::build(next, edges);
}

namespace {

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("named: cycles need at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::build(n, edges);
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("named: paths need at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::build(n, edges);
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("named: complete graphs need at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::build(n, edges);
}

std::optional<int> size_suffix(std::string_view name, char prefix) {
  if (name.size() < 2 || name[0] != prefix) return std::nullopt;
  int value = 0;
  const auto* first = name.data() + 1;
  const auto* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

std::vector<std::string> named_catalog() {
  return {"K4", "K3,3", "prism", "petersen", "heawood", "K1,3", "C<n>", "P<n>", "K<n>"};
}

Graph named(std::string_view raw) {
  std::string name;
  for (char c : raw) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (name == "k3,3" || name == "k33") {
    std::vector<Edge> edges;
    for (int i = 0; i < 3; ++i) {
      for (int j = 3; j < 6; ++j) edges.push_back({i, j});
    }
    return Graph::build(6, edges);
  }
  if (name == "k1,3" || name == "k13" || name == "claw") return Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  if (name == "prism") {
    return Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  }
  if (name == "petersen") {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
      edges.push_back({i, (i + 1) % 5});
      edges.push_back({i, i + 5});
      edges.push_back({i + 5, (i + 2) % 5 + 5});
    }
    return Graph::build(10, edges);
  }
  if (name == "heawood") {
    // LCF notation [5, -5]^7.
    std::vector<Edge> edges;
    for (int i = 0; i < 14; ++i) {
      edges.push_back({i, (i + 1) % 14});
      if (i % 2 == 0) edges.push_back({i, (i + 5) % 14});
    }
    return Graph::build(14, edges);
  }
  if (auto n = size_suffix(name, 'c')) return cycle(*n);
  if (auto n = size_suffix(name, 'p')) return path(*n);
  if (auto n = size_suffix(name, 'k')) return complete(*n);
  std::string valid;
  for (const auto& s : named_catalog()) valid += (valid.empty() ? "" : ", ") + s;
  throw std::invalid_argument("named: unknown graph \"" + std::string(raw) + "\"; valid names: " + valid);
}

Graph random_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("random_cubic: n must be even and at least 4");
  Rng rng(seed);
  std::vector<int> stubs(3 * static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<int>(i / 3);
    for (std::size_t i = stubs.size() - 1; i > 0; --i) std::swap(stubs[i], stubs[rng.below(i + 1)]);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      Edge e{std::min(stubs[i], stubs[i + 1]), std::max(stubs[i], stubs[i + 1])};
      if (e.u == e.v || std::find(edges.begin(), edges.end(), e) != edges.end()) simple = false;
      edges.push_back(e);
    }
    if (simple) return Graph::build(n, edges);
  }
  throw std::runtime_error("random_cubic: rejection sampling did not produce a simple graph");
}

std::vector<Graph> enumerate_subcubic(int n, bool connected_only) {
  if (n < 1 || n > kEnumerationLimit) {
    throw std::invalid_argument("enumerate_subcubic: n must be in [1, " + std::to_string(kEnumerationLimit) + "]");
  }
  // Every graph on s+1 vertices arises from one on s vertices by adding a
  // vertex; a connected one arises from a connected one (drop a leaf of a
  // spanning tree). Each level is deduplicated by canonical form.
  std::vector<Graph> level{Graph::build(1, std::vector<Edge>{})};
  for (int s = 1; s < n; ++s) {
    std::map<std::uint64_t, Graph> next;
    for (const Graph& g : level) {
      std::vector<int> open;
      for (int v = 0; v < s; ++v) {
        if (g.degree(v) < 3) open.push_back(v);
      }
      const std::vector<Edge> base = g.edges();
      const int choices = static_cast<int>(open.size());
      for (std::uint32_t mask = 0; mask < (1u << choices); ++mask) {
        const int picked = std::popcount(mask);
        if (picked > 3 || (connected_only && picked == 0)) continue;
        std::vector<Edge> edges = base;
        for (int i = 0; i < choices; ++i) {
          if ((mask >> i) & 1u) edges.push_back({open[i], s});
        }
        const Graph candidate = Graph::build(s + 1, edges);
        CanonicalForm form = canonical_form(candidate, kCanonicalHardLimit);
        if (next.contains(form.bits)) continue;
        std::vector<int> perm(s + 1);
        for (int pos = 0; pos <= s; ++pos) perm[form.order[pos]] = pos;
        next.emplace(form.bits, permute(candidate, perm));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  if (connected_only) {
    std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  }
  return level;
}

}  // namespace hlindex
