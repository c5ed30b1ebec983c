#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hlindex/graph.hpp"
#include "hlindex/spectral.hpp"

namespace hlindex {

enum class Side : std::uint8_t { A, B };

inline Side other(Side s) { return s == Side::A ? Side::B : Side::A; }
inline char to_char(Side s) { return s == Side::A ? 'A' : 'B'; }

class Bipartition {
 public:
  Bipartition() = default;
  explicit Bipartition(std::vector<Side> sides) : sides_(std::move(sides)) {}
  static Bipartition all(int n, Side s) { return Bipartition(std::vector<Side>(n, s)); }
  /// Parses a string of 'A'/'B' characters.
  static Bipartition from_string(std::string_view labels);

  int order() const { return static_cast<int>(sides_.size()); }
  Side operator[](int v) const { return sides_[v]; }
  void set(int v, Side s) { sides_[v] = s; }
  void flip(int v) { sides_[v] = other(sides_[v]); }

  int count(Side s) const;
  std::vector<int> members(Side s) const;
  std::string to_string() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<Side> sides_;
};

/// Cross edges, counted with multiplicity.
int cut_size(const Graph& g, const Bipartition& p);

/// Every vertex has at least as many neighbors across as on its own side.
bool is_unfriendly(const Graph& g, const Bipartition& p);

/// Both sides induce disjoint unions of paths with at most two edges.
bool is_nice(const Graph& g, const Bipartition& p);

/// Single-flip local search for a locally maximal cut. Starts from a seeded
/// random partition and repeatedly flips the lowest-indexed vertex whose flip
/// strictly increases the cut.
Bipartition unfriendly_search(const Graph& g, std::uint64_t seed);

struct LocalSearchTrace {
  Bipartition partition;
  std::vector<int> cut_trajectory;  // cut size after each flip, starting value first
};
LocalSearchTrace unfriendly_search_traced(const Graph& g, std::uint64_t seed);

/// Vertices whose flip keeps the partition nice. Throws if p is not nice.
std::vector<int> unstable_vertices(const Graph& g, const Bipartition& p);

inline constexpr int kDefaultBudget = 32;

/// Searches for a nice partition with |A| != |B| (subcubic graphs only).
/// An empty result means "unknown", not "does not exist".
std::optional<Bipartition> find_unbalanced_nice(const Graph& g, int budget = kDefaultBudget,
                                                std::uint64_t seed = 0);

inline constexpr int kMaxCertificateDepth = 3;

/// Partition evidence that lambda_H and lambda_L lie in [-sqrt 2, sqrt 2].
/// The part labelled `big_side` plays B; components of G(B) are numbered in
/// the order of components() on the induced subgraph.
struct Certificate {
  Bipartition partition;
  Side big_side = Side::B;
  int k = 1;
  std::vector<int> exceptional;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertificateCheck {
  bool accepted = false;
  std::vector<std::string> failures;
  int a_size = 0;
  int b_size = 0;
  int H = 0;
  int k = 0;
  // lambda_k(G(B)) and lambda_k^-(G(B)); lambda_H(G) <= upper and lambda_L(G) >= lower.
  double upper = 0.0;
  double lower = 0.0;
  double upper_margin = 0.0;  // sqrt 2 - upper
  double lower_margin = 0.0;  // lower + sqrt 2
  Outcome upper_outcome = Outcome::Fail;
  Outcome lower_outcome = Outcome::Fail;
};

struct CertifyOptions {
  double eps = kEps;
  int max_k = kMaxCertificateDepth;
};

/// Checks a certificate using eigenvalues of G(B)'s components only.
CertificateCheck verify_certificate(const Graph& g, const Certificate& cert, const CertifyOptions& options = {});

struct CertifyResult {
  std::optional<Certificate> certificate;
  std::string method;  // "unbalanced-nice", "widened-cycle", or "unknown"
  int restarts = 0;
};

/// Heuristic certificate search for subcubic graphs: an unbalanced nice
/// partition (k = 1), then moving a short induced cycle into the larger part
/// (k up to max_k). Every returned certificate passes verify_certificate.
CertifyResult certify(const Graph& g, int budget = kDefaultBudget, std::uint64_t seed = 0,
                      const CertifyOptions& options = {});

class CertificateFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Three lines: "n k big_side", the n side labels, the exceptional ids.
std::string write_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

}  // namespace hlindex
