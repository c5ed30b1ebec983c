#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hlindex/graph.hpp"

namespace hlindex {

/// Default tolerance for comparisons against thresholds such as sqrt(2).
inline constexpr double kEps = 1e-9;
/// Tolerance for interlacing chains and spectral identities.
inline constexpr double kIdentityTol = 1e-8;

/// Adjacency eigenvalues in nonincreasing order.
struct Spectrum {
  std::vector<double> values;

  int order() const { return static_cast<int>(values.size()); }
  /// i-th largest eigenvalue, 1-based.
  double largest(int i) const { return values.at(static_cast<std::size_t>(i - 1)); }
  /// i-th smallest eigenvalue, 1-based.
  double smallest(int i) const { return values.at(values.size() - static_cast<std::size_t>(i)); }
};

/// Eigenvalues of a dense symmetric matrix stored row-major (n*n entries),
/// sorted nonincreasing. Cyclic Jacobi for small matrices, Householder
/// tridiagonalization plus implicit QL above kJacobiCutoff.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n);

inline constexpr int kJacobiCutoff = 128;

namespace detail {
std::vector<double> jacobi_eigenvalues(std::vector<double> matrix, int n);
std::vector<double> tridiagonal_ql_eigenvalues(std::vector<double> matrix, int n);
}  // namespace detail

std::vector<double> adjacency_matrix(const Graph& g);

/// Full adjacency spectrum; multigraph entries are edge multiplicities.
Spectrum eigenvalues(const Graph& g);

struct MedianIndices {
  int H = 0;
  int L = 0;
};
/// H = floor((n+1)/2), L = ceil((n+1)/2), 1-based. Throws for n < 1.
MedianIndices hl_indices(int n);

struct HLResult {
  int H = 0;
  int L = 0;
  double lambda_H = 0.0;
  double lambda_L = 0.0;
  double R = 0.0;
};
HLResult hl_index(const Spectrum& spectrum);
HLResult hl_index(const Graph& g);

enum class Outcome { Pass, Boundary, Fail };
const char* to_string(Outcome outcome);

/// Margin > eps is Pass, margin < -eps is Fail, anything in between Boundary.
Outcome classify(double margin, double eps = kEps);

struct InterlacingReport {
  bool pass = true;
  double worst_margin = 0.0;
  int worst_index = 0;        // the i of the tightest inequality
  std::string worst_relation;  // which of the four inequalities
};

/// Checks lambda_i(G) >= lambda_i(G-A) >= lambda_{i+k}(G) and the mirrored
/// chain for the smallest eigenvalues, for every i <= n-k.
InterlacingReport check_interlacing(const Graph& g, std::span<const int> removed, double tol = kIdentityTol);
InterlacingReport check_interlacing(const Spectrum& whole, const Spectrum& part, double tol = kIdentityTol);

/// Eigenvalues in [lo - tol, hi + tol].
int count_in_interval(const Spectrum& spectrum, double lo, double hi, double tol = kEps);

/// One eigenvalue per line at 17 significant digits.
std::string format_spectrum(const Spectrum& spectrum);

struct IdentityResiduals {
  double trace = 0.0;    // |sum lambda|
  double squares = 0.0;  // |sum lambda^2 - tr(A^2)|
  double trace_limit = 0.0;
  double squares_limit = 0.0;
  bool ok() const { return trace <= trace_limit && squares <= squares_limit; }
};
/// tr(A) = 0 and tr(A^2) = sum of squared entries, with the tolerances
/// 1e-8 * n and 1e-8 * (tr(A^2) + 1).
IdentityResiduals identity_residuals(const Graph& g, const Spectrum& spectrum);

/// Process-wide tally of identity checks run by eigenvalues(Graph).
struct SpectrumAudit {
  std::uint64_t spectra = 0;
  std::uint64_t violations = 0;
  double worst_trace_ratio = 0.0;    // residual / limit
  double worst_squares_ratio = 0.0;
};
SpectrumAudit spectrum_audit();
void reset_spectrum_audit();

}  // namespace hlindex
