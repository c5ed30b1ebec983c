#include "hlindex/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>

namespace hlindex {

namespace detail {

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  double frobenius = 0.0;
  for (double x : a) frobenius += x * x;
  frobenius = std::sqrt(frobenius);
  const double threshold = 1e-12 * (1.0 + frobenius);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
    }
    if (off <= threshold) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          const double np = c * akp - s * akq;
          const double nq = s * akp + c * akq;
          at(k, p) = np;
          at(p, k) = np;
          at(k, q) = nq;
          at(q, k) = nq;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = at(i, i);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
// off[i] couples i and i+1; off[n-1] is ignored.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& off) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return;
  off[n - 1] = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iterations = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double scale = std::abs(diag[m]) + std::abs(diag[m + 1]);
        if (std::abs(off[m]) <= eps * scale) break;
      }
      if (m == l) break;
      if (++iterations > 200) throw std::runtime_error("tridiagonal QL failed to converge");
      double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
      double r = std::hypot(g, 1.0);
      g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool deflated = false;
      for (int i = m - 1; i >= l; --i) {
        const double f = s * off[i];
        const double b = c * off[i];
        r = std::hypot(f, g);
        off[i + 1] = r;
        if (r == 0.0) {
          diag[i + 1] -= p;
          off[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = diag[i + 1] - p;
        r = (diag[i] - g) * s + 2.0 * c * b;
        p = s * r;
        diag[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      diag[l] -= p;
      off[l] = g;
      off[m] = 0.0;
    } while (true);
  }
}

}  // namespace

std::vector<double> tridiagonal_ql_eigenvalues(std::vector<double> a, int n) {
  std::vector<double> diag(n, 0.0);
  std::vector<double> off(n, 0.0);
  std::vector<double> v(n);
  std::vector<double> w(n);
  auto row = [&](int i) { return a.data() + static_cast<std::size_t>(i) * n; };

  // Householder reduction of the trailing block below row k, in place on the
  // full symmetric matrix.
  for (int k = 0; k + 2 < n; ++k) {
    const int lo = k + 1;
    const int len = n - lo;
    const double* xk = row(k) + lo;
    double norm = 0.0;
    for (int i = 0; i < len; ++i) norm += xk[i] * xk[i];
    norm = std::sqrt(norm);
    diag[k] = row(k)[k];
    if (norm == 0.0) {
      off[k] = 0.0;
      continue;
    }
    const double alpha = xk[0] > 0 ? -norm : norm;
    for (int i = 0; i < len; ++i) v[i] = xk[i];
    v[0] -= alpha;
    double vnorm2 = 0.0;
    for (int i = 0; i < len; ++i) vnorm2 += v[i] * v[i];
    off[k] = alpha;
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // w = beta * S v
    double vp = 0.0;
    for (int i = 0; i < len; ++i) {
      const double* si = row(lo + i) + lo;
      double acc = 0.0;
      for (int j = 0; j < len; ++j) acc += si[j] * v[j];
      w[i] = beta * acc;
      vp += v[i] * w[i];
    }
    const double kappa = vp / vnorm2;
    for (int i = 0; i < len; ++i) w[i] -= kappa * v[i];
    for (int i = 0; i < len; ++i) {
      double* si = row(lo + i) + lo;
      const double vi = v[i];
      const double wi = w[i];
      for (int j = 0; j < len; ++j) si[j] -= vi * w[j] + wi * v[j];
    }
  }
  if (n >= 2) {
    diag[n - 2] = row(n - 2)[n - 2];
    off[n - 2] = row(n - 2)[n - 1];
  }
  if (n >= 1) diag[n - 1] = row(n - 1)[n - 1];

  tridiagonal_ql(diag, off);
  std::sort(diag.begin(), diag.end(), std::greater<>());
  return diag;
}

}  // namespace detail

std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n) {
  if (n < 0 || matrix.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("symmetric_eigenvalues: matrix size does not match n");
  }
  if (n == 0) return {};
  if (n <= kJacobiCutoff) return detail::jacobi_eigenvalues(std::move(matrix), n);
  return detail::tridiagonal_ql_eigenvalues(std::move(matrix), n);
}

std::vector<double> adjacency_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) a[static_cast<std::size_t>(v) * n + w] += 1.0;
  }
  return a;
}

namespace {

std::atomic<std::uint64_t> g_spectra{0};
std::atomic<std::uint64_t> g_violations{0};
std::atomic<double> g_worst_trace{0.0};
std::atomic<double> g_worst_squares{0.0};

void raise_to(std::atomic<double>& slot, double value) {
  double current = slot.load(std::memory_order_relaxed);
  while (value > current && !slot.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
  }
}

}  // namespace

Spectrum eigenvalues(const Graph& g) {
  Spectrum s{symmetric_eigenvalues(adjacency_matrix(g), g.order())};
  const IdentityResiduals res = identity_residuals(g, s);
  g_spectra.fetch_add(1, std::memory_order_relaxed);
  if (!res.ok()) g_violations.fetch_add(1, std::memory_order_relaxed);
  raise_to(g_worst_trace, res.trace / res.trace_limit);
  raise_to(g_worst_squares, res.squares / res.squares_limit);
  return s;
}

SpectrumAudit spectrum_audit() {
  return {g_spectra.load(), g_violations.load(), g_worst_trace.load(), g_worst_squares.load()};
}

void reset_spectrum_audit() {
  g_spectra = 0;
  g_violations = 0;
  g_worst_trace = 0.0;
  g_worst_squares = 0.0;
}

IdentityResiduals identity_residuals(const Graph& g, const Spectrum& spectrum) {
  double sum = 0.0;
  double squares = 0.0;
  for (double x : spectrum.values) {
    sum += x;
    squares += x * x;
  }
  double trace_a2 = 0.0;
  for (int v = 0; v < g.order(); ++v) {
    for (auto it = g.neighbors(v).begin(); it != g.neighbors(v).end();) {
      const int mult = g.multiplicity(v, *it);
      trace_a2 += static_cast<double>(mult) * mult;
      it += mult;
    }
  }
  IdentityResiduals r;
  r.trace = std::abs(sum);
  r.squares = std::abs(squares - trace_a2);
  r.trace_limit = kIdentityTol * std::max(1, g.order());
  r.squares_limit = kIdentityTol * (trace_a2 + 1.0);
  return r;
}

MedianIndices hl_indices(int n) {
  if (n < 1) throw std::invalid_argument("hl_indices: n must be at least 1");
  return {(n + 1) / 2, (n + 2) / 2};
}

HLResult hl_index(const Spectrum& spectrum) {
  const auto [H, L] = hl_indices(spectrum.order());
  HLResult r;
  r.H = H;
  r.L = L;
  r.lambda_H = spectrum.largest(H);
  r.lambda_L = spectrum.largest(L);
  r.R = std::max(std::abs(r.lambda_H), std::abs(r.lambda_L));
  return r;
}

HLResult hl_index(const Graph& g) { return hl_index(eigenvalues(g)); }

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Boundary: return "boundary";
    case Outcome::Fail: return "fail";
  }
  return "?";
}

Outcome classify(double margin, double eps) {
  if (margin > eps) return Outcome::Pass;
  if (margin < -eps) return Outcome::Fail;
  return Outcome::Boundary;
}

InterlacingReport check_interlacing(const Spectrum& whole, const Spectrum& part, double tol) {
  const int n = whole.order();
  const int k = n - part.order();
  InterlacingReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  auto consider = [&](double margin, int i, const char* relation) {
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_index = i;
      report.worst_relation = relation;
    }
  };
  for (int i = 1; i <= n - k; ++i) {
    consider(whole.largest(i) - part.largest(i), i, "lambda_i(G) >= lambda_i(K)");
    consider(part.largest(i) - whole.largest(i + k), i, "lambda_i(K) >= lambda_{i+k}(G)");
    consider(part.smallest(i) - whole.smallest(i), i, "lambda-_i(G) <= lambda-_i(K)");
    consider(whole.smallest(i + k) - part.smallest(i), i, "lambda-_i(K) <= lambda-_{i+k}(G)");
  }
  if (n - k == 0) report.worst_margin = 0.0;
  report.pass = report.worst_margin >= -tol;
  return report;
}

InterlacingReport check_interlacing(const Graph& g, std::span<const int> removed, double tol) {
  std::vector<char> drop(g.order(), 0);
  for (int v : removed) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("check_interlacing: vertex out of range");
    if (drop[v]) throw std::invalid_argument("check_interlacing: repeated vertex");
    drop[v] = 1;
  }
  if (static_cast<int>(removed.size()) >= g.order()) {
    throw std::invalid_argument("check_interlacing: the removed set must be a proper subset");
  }
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  const Graph part = induced_subgraph(g, keep).graph;
  return check_interlacing(eigenvalues(g), eigenvalues(part), tol);
}

int count_in_interval(const Spectrum& spectrum, double lo, double hi, double tol) {
  if (lo > hi) throw std::invalid_argument("count_in_interval: lo > hi");
  return static_cast<int>(std::count_if(spectrum.values.begin(), spectrum.values.end(),
                                        [&](double x) { return x >= lo - tol && x <= hi + tol; }));
}

std::string format_spectrum(const Spectrum& spectrum) {
  std::string out;
  char buf[64];
  for (double x : spectrum.values) {
    std::snprintf(buf, sizeof buf, "%.17g\n", x);
    out += buf;
  }
  return out;
}

}  // namespace hlindex
