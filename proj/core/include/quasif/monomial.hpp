#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quasif {

/// Exact binomial coefficient C(a, b); 0 when b < 0 or b > a.  The supported
/// variable range (n <= 64) keeps every value used here inside long long.
long long binom(long long a, long long b);

/// Validates 1 <= n <= 64 (one machine word per variable set).
void check_var_count(int n);

/// A square-free monomial in x_1..x_n, stored as a bitmask of its 1-based
/// variable indices.  The same value type serves as a vertex subset when
/// working with simplicial complexes: the support of x_{i_1}...x_{i_k} and
/// the face {v_{i_1},...,v_{i_k}} are one object.
class Monomial {
 public:
  static constexpr int kMaxVars = 64;

  Monomial() = default;

  static Monomial from_mask(std::uint64_t mask) { return Monomial(mask); }
  /// Validates every index against 1..n; repeated indices are rejected.
  static Monomial from_indices(std::span<const int> indices, int n);
  static Monomial single(int var);

  std::uint64_t mask() const { return mask_; }
  int degree() const;
  bool empty() const { return mask_ == 0; }

  bool contains(int var) const;
  /// Divisibility of square-free monomials is containment of supports.
  bool divides(const Monomial& other) const {
    return (mask_ & other.mask_) == mask_;
  }

  Monomial with(int var) const;
  Monomial without(int var) const;
  Monomial unite(const Monomial& other) const {
    return Monomial(mask_ | other.mask_);
  }
  Monomial complement(int n) const;

  /// Ascending 1-based variable indices.
  std::vector<int> vars() const;

  /// Compact form "x1x2"; the empty monomial prints as "1".
  std::string str() const;
  /// Set form "{1,2}".
  std::string set_str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  explicit Monomial(std::uint64_t mask) : mask_(mask) {}

  std::uint64_t mask_ = 0;
};

/// Canonical order used everywhere: degree first, then lexicographic on the
/// ascending index sequences.
bool operator<(const Monomial& a, const Monomial& b);

/// Accepts compact form "x1x2x5", product form "x1*x2*x5", or an index list
/// "[1,2,5]".  Indices are greedy: "x12" is x_12, not x_1*x_2.
Monomial parse_monomial(std::string_view text, int n);

/// All C(n,d) square-free monomials of degree d, in canonical order.
std::vector<Monomial> sm_universe(int n, int d);

std::uint64_t full_mask(int n);

}  // namespace quasif
