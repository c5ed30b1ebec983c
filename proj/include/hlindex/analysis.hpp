#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hlindex/graph.hpp"
#include "hlindex/spectral.hpp"

namespace hlindex {

/// One numerically evaluated step `lhs >= rhs` of the average-degree bound.
struct Inequality {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin() const { return lhs - rhs; }
  bool holds = false;  // margin >= -1e-8 * max(1, |lhs|, |rhs|)
};

/// The upper bound R(G) <= sqrt(d) under one reading of "average degree" d.
struct DegreeReading {
  std::string name;  // "edges_per_vertex" (|E|/|V|) or "mean_valence" (2|E|/|V|)
  double d = 0.0;
  double sqrt_d_bound = 0.0;
  bool sqrt_d_holds = false;
  double refined_bound = 0.0;  // sqrt(d - d(d-1)/(n-1))
  bool refined_degenerate = false;
  bool refined_holds = false;
  // n d >= sum of squared eigenvalues, the step that fixes d.
  Inequality degree_sum;
  // n d >= (n-1) R^2 + d^2, the refined-bound step.
  Inequality refined_step;
};

struct BoundReport {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  double trace_sum = 0.0;
  double square_sum = 0.0;
  HLResult hl;
  /// "lambda_H" when R = lambda_H > 0, "lambda_L" otherwise, "zero" when R = 0.
  std::string branch;
  int split_index = 0;       // l
  std::vector<int> c_set;    // 1-based eigenvalue indices
  std::vector<int> d_set;
  std::vector<Inequality> chain;           // the steps from sum of squares down to n R^2
  std::vector<Inequality> modified_chain;  // same steps with lambda_1 replaced by R
  bool chain_holds = true;
  std::vector<DegreeReading> readings;
  double sqrt_max_degree = 0.0;
  bool max_degree_bound_holds = false;  // R <= sqrt(Delta) + eps
};

/// Evaluates every step of the average-degree upper bound on G. Requires n >= 2.
BoundReport bound_report(const Graph& g, double eps = kEps);

struct RefinedBound {
  double value = 0.0;
  bool degenerate = false;
};
/// sqrt(d - d(d-1)/(n-1)), clamped at 0. Requires n >= 2 and 0 < d <= n-1.
RefinedBound refined_upper_bound(double d, int n);

struct WindowReport {
  int n = 0;
  int H = 0;
  int L = 0;
  std::optional<double> lambda_H_minus_1;
  std::optional<double> lambda_H_plus_1;
  /// Largest w with lambda_i in [-sqrt 2, sqrt 2] for H-w <= i <= L+w; -1 if
  /// even the median pair is outside.
  int max_halfwidth = -1;
  int required_halfwidth = 0;  // floor(n / 6140)
  bool paper_delta_ok = false;
};
WindowReport median_window(const Graph& g, double eps = kEps);
WindowReport median_window(const Spectrum& spectrum, double eps = kEps);

struct BallPackingReport {
  int radius = 0;
  double threshold = 0.0;
  std::vector<int> centers;
  std::vector<int> ball_sizes;
  std::vector<double> ball_radii;  // lambda_1 of each ball
  int packed = 0;
  int qualifying = 0;  // balls with lambda_1 > threshold + eps
  int direct = 0;      // eigenvalues of G above threshold - eps
  bool holds = false;  // direct >= qualifying
};
/// Greedy centers (ascending) pairwise at distance >= 2r+2; counts balls whose
/// spectral radius beats the threshold against G's eigenvalues above it.
BallPackingReport ball_packing_count(const Graph& g, int radius, double threshold, double eps = kEps);
BallPackingReport ball_packing_count(const Graph& g, const Spectrum& spectrum, int radius, double threshold,
                                     double eps = kEps);

struct ConversePackingReport {
  bool hypothesis_ok = true;  // no component is a path with <= 3 edges
  std::vector<std::vector<int>> pieces;
  std::vector<std::string> piece_kinds;  // "K3", "K1,3", "P5"
  int packed = 0;
  int direct_ge_sqrt3 = 0;
  int target = 0;  // ceil(n / 30)
  bool holds = false;  // direct_ge_sqrt3 >= packed (only asserted under the hypothesis)
};
/// Greedy packing of pairwise non-adjacent induced K3 / K1,3 / P5 copies.
ConversePackingReport converse_packing(const Graph& g, double eps = kEps);
ConversePackingReport converse_packing(const Graph& g, const Spectrum& spectrum, double eps = kEps);

struct ExtremalReport {
  int degree = 0;
  int n = 0;
  Graph best;
  double best_R = 0.0;
  std::vector<double> trajectory;  // best-so-far after each iteration
  int restarts = 0;
  int accepted_moves = 0;
};
/// Hill climbing on R(G) over connected d-regular graphs with 2-edge swaps.
ExtremalReport extremal_search(int degree, int n, int iterations, std::uint64_t seed);

inline constexpr int kPlanarityLimit = 16;

/// Planarity of a subcubic graph by searching for a K3,3 subdivision
/// (subcubic graphs cannot contain a K5 subdivision).
bool is_planar_subcubic(const Graph& g, int limit = kPlanarityLimit);

struct ScanRow {
  int n = 0;
  int graphs = 0;          // connected subcubic graphs examined
  int planar = 0;
  double max_R = 0.0;      // over planar graphs
  std::string argmax;      // graph6 of a maximizer
};

struct FlaggedGraph {
  std::string graph6;
  double R = 0.0;
};

struct ConjectureScanReport {
  int n_max = 0;
  double flag_threshold = 1.0;
  std::vector<ScanRow> rows;
  std::vector<FlaggedGraph> flagged;  // planar graphs with R > threshold + eps
  bool k4_seen = false;
  double k4_R = 0.0;
};

/// Scans the given graphs (planarity filter first) and tabulates R per order.
ConjectureScanReport scan_planar(std::span<const Graph> graphs, double flag_threshold = 1.0, double eps = kEps);
/// Connected planar subcubic graphs up to n_max (<= 10).
ConjectureScanReport conjecture_scan(int n_max, double flag_threshold = 1.0, double eps = kEps);

}  // namespace hlindex
