#pragma once

#include <vector>

#include "quasif/monomial.hpp"

namespace quasif {

/// A set of square-free monomials of one common degree, the shape shadow
/// operators act on.
class ShadowSet {
 public:
  ShadowSet(int n, int degree, std::vector<Monomial> members);

  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<Monomial>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  friend bool operator==(const ShadowSet&, const ShadowSet&) = default;

 private:
  int n_;
  int degree_;
  std::vector<Monomial> members_;
};

/// Every degree+1 multiple g*x_i with x_i not dividing g.
ShadowSet upper_shadow(const ShadowSet& t);

/// Every degree-1 divisor g/x_i.
ShadowSet lower_shadow(const ShadowSet& t);

/// Upper shadow fills the whole degree+1 layer.
bool is_upper_perfect(const ShadowSet& t);

/// Lower shadow fills the whole degree-1 layer.
bool is_lower_perfect(const ShadowSet& t);

/// Both shadows full; requires 1 <= degree < n.
bool is_perfect(const ShadowSet& t);

/// Smallest cardinality of a perfect set of degree 2: t^2 - t for n = 2t and
/// t^2 for n = 2t + 1.  Defined for n >= 4.
long long perfect_number_formula(int n);

/// Smallest cardinality of a perfect subset of the degree-d layer, found by
/// increasing-cardinality subset search with shadow-coverage pruning.
/// Feasible while C(n,d) <= 24.
long long perfect_number_bruteforce(int n, int d);

}  // namespace quasif
