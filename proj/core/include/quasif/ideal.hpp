#pragma once

#include <vector>

#include "quasif/monomial.hpp"

namespace quasif {

/// A square-free monomial ideal of k[x_1..x_n], held by its unique minimal
/// generating set G(I): a divisibility antichain kept in canonical order.
/// The zero ideal (no generators) is representable; operations that need a
/// nonzero ideal reject it explicitly.
class Ideal {
 public:
  /// Default state: the zero ideal on one variable.
  Ideal() = default;

  static Ideal zero(int n);

  int n() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  std::size_t generator_count() const { return gens_.size(); }

  bool contains_generator(const Monomial& m) const;

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend Ideal minimalize(std::vector<Monomial> gens, int n);

 private:
  Ideal(int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}

  int n_ = 1;
  std::vector<Monomial> gens_;
};

/// Removes every monomial whose support strictly contains another member's,
/// yielding G(I).  Idempotent; an empty input gives the zero ideal.
Ideal minimalize(std::vector<Monomial> gens, int n);

/// Union of the generator supports.
Monomial support(const Ideal& ideal);

bool has_full_support(const Ideal& ideal);

/// True iff every generator has degree d (vacuously true for the zero ideal).
bool is_equigenerated(const Ideal& ideal, int d);

/// 0 for the zero ideal.
int max_generator_degree(const Ideal& ideal);

}  // namespace quasif
