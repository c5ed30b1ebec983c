#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hlindex/families.hpp"
#include "hlindex/graph.hpp"
#include "hlindex/rng.hpp"
#include "hlindex/spectral.hpp"
#include "oracles.hpp"

using namespace hlindex;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

Graph random_subcubic(Rng& rng, int n) {
  std::vector<int> deg(n, 0);
  std::vector<Edge> e;
  for (int attempt = 0; attempt < 3 * n; ++attempt) {
    const int u = static_cast<int>(rng.below(n)), v = static_cast<int>(rng.below(n));
    if (u == v || deg[u] == 3 || deg[v] == 3) continue;
    if (std::find_if(e.begin(), e.end(), [&](const Edge& x) {
          return (x.u == u && x.v == v) || (x.u == v && x.v == u);
        }) != e.end()) {
      continue;
    }
    e.push_back({u, v});
    ++deg[u];
    ++deg[v];
  }
  return Graph::build(n, e);
}

}  // namespace

TEST_CASE("eigenvalues: P3, K4, Heawood") {
  CHECK(max_diff(eigenvalues(named("P3")).values, {kSqrt2, 0.0, -kSqrt2}) < 1e-9);
  CHECK(max_diff(eigenvalues(named("K4")).values, {3, -1, -1, -1}) < 1e-9);
  std::vector<double> heawood{3};
  heawood.insert(heawood.end(), 6, kSqrt2);
  heawood.insert(heawood.end(), 6, -kSqrt2);
  heawood.push_back(-3);
  CHECK(max_diff(eigenvalues(named("heawood")).values, heawood) < 1e-9);
  CHECK(eigenvalues(Graph::build(0, std::vector<Edge>{})).values.empty());
}

TEST_CASE("multigraph entries are multiplicities") {
  const Graph d = Graph::build(2, {{0, 1}, {0, 1}}, true);
  CHECK(max_diff(eigenvalues(d).values, {2, -2}) < 1e-12);
}

TEST_CASE("hl_indices") {
  CHECK(hl_indices(3).H == 2);
  CHECK(hl_indices(3).L == 2);
  CHECK(hl_indices(4).H == 2);
  CHECK(hl_indices(4).L == 3);
  CHECK(hl_indices(14).H == 7);
  CHECK(hl_indices(14).L == 8);
  CHECK_THROWS(hl_indices(0));
}

TEST_CASE("hl_index: K4, K3,3, Petersen") {
  CHECK(hl_index(named("K4")).R == doctest::Approx(1.0));
  CHECK(std::abs(hl_index(named("K3,3")).R) < 1e-9);
  const auto p = hl_index(named("petersen"));
  CHECK(p.H == 5);
  CHECK(p.L == 6);
  CHECK(p.R == doctest::Approx(1.0));
}

TEST_CASE("check_interlacing examples and errors") {
  const Graph k4 = named("K4");
  const std::vector<int> one{3};
  const auto r = check_interlacing(k4, one);
  CHECK(r.pass);
  CHECK(r.worst_margin >= -1e-8);
  const auto none = check_interlacing(k4, std::vector<int>{});
  CHECK(none.pass);
  CHECK(std::abs(none.worst_margin) < 1e-9);
  const std::vector<int> all{0, 1, 2, 3};
  CHECK_THROWS(check_interlacing(k4, all));
  CHECK_THROWS(check_interlacing(k4, std::vector<int>{1, 1}));
  CHECK_THROWS(check_interlacing(k4, std::vector<int>{4}));
  // A spectrum that does not interlace is detected.
  const Spectrum whole{{3, -1, -1, -1}};
  const Spectrum wrong{{2.5, 2.0, -1}};
  CHECK_FALSE(check_interlacing(whole, wrong).pass);
}

TEST_CASE("interlacing on random subcubic graphs") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(11));
    const Graph g = random_subcubic(rng, n);
    std::vector<int> removed;
    for (int v = 0; v < n; ++v) {
      if (rng.below(3) == 0) removed.push_back(v);
    }
    if (static_cast<int>(removed.size()) == n) removed.pop_back();
    CHECK(check_interlacing(g, removed).pass);
  }
}

TEST_CASE("count_in_interval") {
  const Spectrum h = eigenvalues(named("heawood"));
  CHECK(count_in_interval(h, -kSqrt2, kSqrt2) == 12);
  CHECK(count_in_interval(eigenvalues(named("K4")), -kSqrt2, kSqrt2) == 3);
  CHECK(count_in_interval(h, -1e300, 1e300) == 14);
  CHECK_THROWS(count_in_interval(h, 1, 0));
}

TEST_CASE("format_spectrum prints 17 significant digits per line") {
  const std::string s = format_spectrum(eigenvalues(named("P2")));
  CHECK(s == "1\n-1\n");
  const std::string p3 = format_spectrum(eigenvalues(named("P3")));
  CHECK(p3.substr(0, p3.find('\n')).size() >= 17);
}

TEST_CASE("eigensolver agrees with the characteristic-polynomial oracle for all graphs n <= 6") {
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::brute_graphs(n, false, false)) {
      const auto expected = oracle::charpoly_eigenvalues(g);
      REQUIRE(expected.size() == static_cast<std::size_t>(n));
      CHECK(max_diff(eigenvalues(g).values, expected) <= 1e-8);
      ++checked;
    }
  }
  CHECK(checked == 1 + 2 + 4 + 11 + 34 + 156);
  // Multigraphs too.
  const Graph m = Graph::build(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {2, 3}}, true);
  CHECK(max_diff(eigenvalues(m).values, oracle::charpoly_eigenvalues(m)) <= 1e-8);
}

TEST_CASE("Jacobi and tridiagonal QL agree") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(60));
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) {
        const double x = static_cast<double>(rng.below(2001)) / 1000.0 - 1.0;
        a[i * n + j] = a[j * n + i] = x;
      }
    }
    auto jac = detail::jacobi_eigenvalues(a, n);
    auto ql = detail::tridiagonal_ql_eigenvalues(a, n);
    std::sort(jac.begin(), jac.end(), std::greater<>());
    std::sort(ql.begin(), ql.end(), std::greater<>());
    CHECK(max_diff(jac, ql) < 1e-9);
  }
}

TEST_CASE("large graphs use QL and keep the accuracy contract") {
  const Graph g = pg2_incidence(11, 1);  // 266 vertices, above the Jacobi cutoff
  const Spectrum s = eigenvalues(g);
  CHECK(s.largest(1) == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(s.smallest(1) == doctest::Approx(-12.0).epsilon(1e-12));
  for (int i = 2; i <= 133; ++i) CHECK(std::abs(s.largest(i) - std::sqrt(11.0)) < 1e-9 * 12);
}

TEST_CASE("disjoint union spectrum is the merged multiset") {
  const Graph a = named("petersen"), b = named("C7");
  std::vector<double> merged = eigenvalues(a).values;
  const auto bv = eigenvalues(b).values;
  merged.insert(merged.end(), bv.begin(), bv.end());
  std::sort(merged.begin(), merged.end(), std::greater<>());
  CHECK(max_diff(eigenvalues(disjoint_union(a, b)).values, merged) < 1e-8);
}

TEST_CASE("bipartite spectra are symmetric") {
  for (const Graph& g : {pg2_incidence(2, 1), pg2_incidence(3, 1), named("C10"), named("P7"), named("K1,3")}) {
    const auto v = eigenvalues(g).values;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(v[i] + v[n - 1 - i]) < 1e-8);
  }
}

TEST_CASE("trace identities and largest eigenvalue vs average degree") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_subcubic(rng, 1 + static_cast<int>(rng.below(30)));
    const Spectrum s = eigenvalues(g);
    const auto r = identity_residuals(g, s);
    CHECK(std::abs(r.trace) <= 1e-8 * g.order());
    CHECK(std::abs(r.squares) <= 1e-8 * (2 * g.edge_count() + 1));
    CHECK(s.largest(1) >= g.average_degree() - 1e-9);
    for (std::size_t i = 1; i < s.values.size(); ++i) CHECK(s.values[i - 1] >= s.values[i]);
  }
}

TEST_CASE("classify reports the boundary band") {
  CHECK(classify(1e-3) == Outcome::Pass);
  CHECK(classify(5e-10) == Outcome::Boundary);
  CHECK(classify(-5e-10) == Outcome::Boundary);
  CHECK(classify(-1e-3) == Outcome::Fail);
}
