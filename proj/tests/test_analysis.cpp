#include <cmath>
#include <numbers>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "doctest.h"
#include "hlindex/analysis.hpp"
#include "hlindex/families.hpp"
#include "hlindex/io.hpp"
#include "hlindex/rng.hpp"

using namespace hlindex;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

bool boost_planar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph b(g.order());
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, b);
  return boost::boyer_myrvold_planarity_test(b);
}

Graph random_subcubic(Rng& rng, int n, int attempts) {
  std::vector<int> deg(n, 0);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> e;
  for (int i = 0; i < attempts; ++i) {
    const int u = static_cast<int>(rng.below(n)), v = static_cast<int>(rng.below(n));
    if (u == v || adj[u][v] || deg[u] == 3 || deg[v] == 3) continue;
    adj[u][v] = adj[v][u] = 1;
    ++deg[u];
    ++deg[v];
    e.push_back({u, v});
  }
  return Graph::build(n, e);
}

}  // namespace

TEST_CASE("bound_report: K4") {
  const auto r = bound_report(named("K4"));
  CHECK(std::abs(r.trace_sum) < 1e-9);
  CHECK(r.square_sum == doctest::Approx(12.0));
  CHECK(r.hl.R == doctest::Approx(1.0));
  REQUIRE(r.readings.size() == 2);
  CHECK(r.readings[0].name == "edges_per_vertex");
  CHECK(r.readings[0].d == doctest::Approx(1.5));
  CHECK(r.readings[0].sqrt_d_holds);
  CHECK(r.chain_holds);
  CHECK(r.max_degree_bound_holds);
  CHECK_THROWS(bound_report(named("P1")));
}

TEST_CASE("bound_report: Heawood exposes the degree convention") {
  const auto r = bound_report(named("heawood"));
  CHECK(r.hl.R == doctest::Approx(kSqrt2));
  CHECK(r.readings[0].d == doctest::Approx(1.5));
  CHECK_FALSE(r.readings[0].sqrt_d_holds);
  CHECK(r.readings[1].d == doctest::Approx(3.0));
  CHECK(r.readings[1].sqrt_d_holds);
  CHECK(r.max_degree_bound_holds);
  CHECK(r.chain_holds);
  // n = 7 = d^2 - d + 1 at mean valence d = 3 after removing the bipartite doubling.
  CHECK(refined_upper_bound(3.0, 7).value == doctest::Approx(kSqrt2));
}

TEST_CASE("bound_report chain holds on all connected subcubic graphs n <= 8 and random graphs") {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : enumerate_subcubic(n, true)) {
      const auto r = bound_report(g);
      CHECK(r.max_degree_bound_holds);
      if (r.hl.R > 1e-9) {
        CHECK(r.chain_holds);
        for (const auto& q : r.chain) CHECK_MESSAGE(q.holds, encode_graph6(g) << " " << q.name);
      }
      CHECK(std::abs(r.square_sum - 2 * r.m) <= 1e-8 * (2 * r.m + 1));
    }
  }
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(30));
    std::vector<Edge> e;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (rng.below(4) == 0) e.push_back({i, j});
      }
    }
    const auto r = bound_report(Graph::build(n, e));
    CHECK(r.max_degree_bound_holds);
    CHECK(r.readings[1].sqrt_d_holds);  // mean-valence reading
    if (r.hl.R > 1e-9) CHECK(r.chain_holds);
  }
}

TEST_CASE("refined_upper_bound") {
  CHECK(refined_upper_bound(3.0, 7).value == doctest::Approx(kSqrt2));
  CHECK(refined_upper_bound(3.0, 1000000).value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-5));
  CHECK(refined_upper_bound(1.0, 2).value == doctest::Approx(1.0));
  CHECK_FALSE(refined_upper_bound(1.0, 2).degenerate);
  CHECK_THROWS(refined_upper_bound(3.0, 1));
  CHECK_THROWS(refined_upper_bound(0.0, 5));
  CHECK_THROWS(refined_upper_bound(5.0, 5));
  // Refined bound: with n = d^2 - d + 1 it equals sqrt(d - 1).
  for (int d = 2; d <= 8; ++d) CHECK(refined_upper_bound(d, d * d - d + 1).value == doctest::Approx(std::sqrt(d - 1.0)));
}

TEST_CASE("median_window examples") {
  const auto h = median_window(named("heawood"));
  CHECK(h.max_halfwidth == 5);
  CHECK(h.paper_delta_ok);
  const auto c3 = median_window(named("C3"));
  REQUIRE(c3.lambda_H_minus_1.has_value());
  CHECK(*c3.lambda_H_minus_1 == doctest::Approx(2.0));
  CHECK(c3.max_halfwidth == 0);
  const auto two = median_window(disjoint_union(named("heawood"), named("heawood")));
  CHECK(two.max_halfwidth == 11);
  const auto c5 = median_window(named("C5"));
  REQUIRE(c5.lambda_H_plus_1.has_value());
  CHECK(*c5.lambda_H_plus_1 == doctest::Approx(2 * std::cos(4 * std::numbers::pi / 5)));
  const auto k1 = median_window(named("P1"));
  CHECK_FALSE(k1.lambda_H_minus_1.has_value());
  CHECK_FALSE(k1.lambda_H_plus_1.has_value());
  CHECK(median_window(named("K5")).max_halfwidth == 1);
}

TEST_CASE("median window on all subcubic graphs n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    for (const Graph& g : enumerate_subcubic(n, false)) {
      const auto w = median_window(g);
      CHECK(w.max_halfwidth >= 0);
      CHECK(w.paper_delta_ok);
    }
  }
}

TEST_CASE("ball_packing_count examples") {
  const auto c = ball_packing_count(named("C100"), 10, 1.95);
  REQUIRE(c.packed > 0);
  for (std::size_t i = 0; i < c.ball_radii.size(); ++i) {
    CHECK(c.ball_sizes[i] == 21);
    CHECK(c.ball_radii[i] == doctest::Approx(2 * std::cos(std::numbers::pi / 22)));
  }
  CHECK(c.qualifying == c.packed);
  CHECK(c.holds);
  const auto high = ball_packing_count(named("petersen"), 1, 3.5);
  CHECK(high.qualifying == 0);
  CHECK(high.direct == 0);
  CHECK_THROWS(ball_packing_count(named("C5"), 0, 1.0));
  const auto cubic = ball_packing_count(random_cubic(1024, 7), 6, 2 * kSqrt2 - 0.5);
  CHECK(cubic.qualifying >= 1);
  CHECK(cubic.direct >= cubic.qualifying);
  // Centers are pairwise at distance >= 2r + 2.
  const Graph g = random_cubic(200, 2);
  const auto r = ball_packing_count(g, 2, 1.0);
  for (std::size_t i = 0; i < r.centers.size(); ++i) {
    const auto d = bfs_distances(g, r.centers[i]);
    for (std::size_t j = i + 1; j < r.centers.size(); ++j) CHECK(d[r.centers[j]] >= 6);
  }
}

TEST_CASE("converse_packing examples") {
  const auto c6 = converse_packing(named("C6"));
  CHECK(c6.packed >= 1);
  CHECK(c6.direct_ge_sqrt3 == 1);
  CHECK(c6.holds);
  const auto claw = converse_packing(named("K1,3"));
  CHECK(claw.packed == 1);
  CHECK(claw.direct_ge_sqrt3 == 1);
  const auto cubic = converse_packing(random_cubic(1024, 3));
  CHECK(cubic.packed >= 35);
  CHECK(cubic.direct_ge_sqrt3 >= cubic.packed);
  CHECK_FALSE(converse_packing(named("P4")).hypothesis_ok);
  CHECK_THROWS(converse_packing(named("K5")));
}

TEST_CASE("packing counts never exceed direct counts on random subcubic graphs") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_subcubic(rng, 20 + static_cast<int>(rng.below(60)), 200);
    const auto cp = converse_packing(g);
    if (cp.hypothesis_ok) CHECK(cp.direct_ge_sqrt3 >= cp.packed);
    for (int r : {1, 2, 3}) CHECK(ball_packing_count(g, r, 1.5).holds);
  }
}

TEST_CASE("extremal_search") {
  const auto k4 = extremal_search(3, 4, 50, 1);
  CHECK(k4.best == named("K4"));
  CHECK(k4.best_R == doctest::Approx(1.0));
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto r = extremal_search(3, 14, 2000, seed);
    CHECK(r.best_R <= kSqrt2 + 1e-9);
    CHECK(std::is_sorted(r.trajectory.begin(), r.trajectory.end()));
    CHECK(r.trajectory.size() == 2000);
    CHECK(is_connected(r.best));
  }
  const auto a = extremal_search(4, 11, 300, 5), b = extremal_search(4, 11, 300, 5);
  CHECK(a.best == b.best);
  CHECK(a.trajectory == b.trajectory);
  CHECK_THROWS(extremal_search(3, 7, 10, 0));
  CHECK_THROWS(extremal_search(3, 3, 10, 0));
}

TEST_CASE("is_planar_subcubic examples") {
  CHECK(is_planar_subcubic(named("K4")));
  CHECK_FALSE(is_planar_subcubic(named("K3,3")));
  CHECK_FALSE(is_planar_subcubic(named("heawood")));
  CHECK_FALSE(is_planar_subcubic(named("petersen")));
  CHECK(is_planar_subcubic(named("prism")));
  CHECK_THROWS(is_planar_subcubic(named("K5")));
  CHECK_THROWS(is_planar_subcubic(random_cubic(18, 1)));
}

TEST_CASE("planarity agrees with Boyer-Myrvold and the Euler bound") {
  for (int n = 1; n <= 10; ++n) {
    for (const Graph& g : enumerate_subcubic(n, false)) {
      const bool planar = is_planar_subcubic(g);
      CHECK_MESSAGE(planar == boost_planar(g), encode_graph6(g));
      if (n >= 3 && g.edge_count() > 3 * n - 6) CHECK_FALSE(planar);
    }
  }
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_subcubic(rng, 11 + static_cast<int>(rng.below(6)), 60);
    CHECK_MESSAGE(is_planar_subcubic(g) == boost_planar(g), encode_graph6(g));
  }
}

TEST_CASE("conjecture scan") {
  const auto r = conjecture_scan(4);
  CHECK(r.k4_seen);
  CHECK(r.k4_R == doctest::Approx(1.0));
  REQUIRE(r.rows.size() == 4);
  CHECK(r.rows[3].max_R == doctest::Approx(1.0));
  CHECK(r.flagged.empty());
  CHECK_THROWS(conjecture_scan(11));
}

TEST_CASE("scan flags planar graphs above the threshold and filters non-planar ones") {
  const std::vector<Graph> graphs{named("heawood"), named("K4"), named("C5")};
  const auto r = scan_planar(graphs);
  CHECK(r.flagged.empty());  // Heawood has R = sqrt 2 but is not planar
  const auto low = scan_planar(graphs, 0.5);
  REQUIRE(low.flagged.size() == 2);
  CHECK(low.flagged[0].graph6 == encode_graph6(named("K4")));
}
