#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hlindex/graph.hpp"

namespace hlindex {

bool is_prime(long long p);

/// GF(p^k). Elements are integers 0..q-1 whose base-p digits are the
/// polynomial coefficients (least significant digit = constant term).
class GaloisField {
 public:
  /// Uses the monic irreducible degree-k polynomial whose lower coefficients,
  /// read as a base-p integer, are smallest. Requires p prime, k >= 1, q <= 2^16.
  static GaloisField build(int p, int k);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int size() const { return q_; }
  /// Coefficients of the modulus, constant term first, length k+1.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;
  int inv(int a) const;

 private:
  int p_ = 0;
  int k_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> log_;  // log_[a] for a != 0
  std::vector<int> exp_;  // exp_[i] for 0 <= i < 2(q-1)
};

/// True when the monic polynomial (constant term first) has no factor of
/// degree between 1 and deg/2 over GF(p).
bool is_irreducible(std::span<const int> monic, int p);

/// Point-line incidence graph of PG(2, p^k): points first, then lines, each in
/// lexicographic order of their normalized coordinates (first nonzero = 1).
Graph pg2_incidence(int p, int k);

/// C_k(t_1, ..., t_k): cycle 0..k-1 with a pendant path of t_i extra vertices
/// at cycle vertex i-1; path vertices follow in order of i.
Graph cycle_with_pendants(std::span<const int> lengths);

/// Named graphs: K4, K3,3, prism, petersen, heawood, K1,3, Cn, Pn (n vertices), Kn.
Graph named(std::string_view name);
std::vector<std::string> named_catalog();

/// Simple cubic graph by the configuration model with rejection.
Graph random_cubic(int n, std::uint64_t seed);

inline constexpr int kEnumerationLimit = 10;

/// One representative per isomorphism class of simple graphs with maximum
/// degree <= 3 on n vertices, in canonical-code order. Representatives are
/// relabeled into canonical order.
std::vector<Graph> enumerate_subcubic(int n, bool connected_only);

}  // namespace hlindex
