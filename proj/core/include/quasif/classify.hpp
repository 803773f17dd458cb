#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasif/fvector.hpp"
#include "quasif/ideal.hpp"
#include "quasif/simplicial_complex.hpp"

namespace quasif {

/// The entrywise difference f(non-face complex) - f(facet complex).
class QuasiType {
 public:
  QuasiType() = default;
  explicit QuasiType(std::vector<long long> entries);
  static QuasiType pair(long long a, long long b) { return QuasiType({a, b}); }

  std::size_t size() const { return entries_.size(); }
  long long operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<long long>& entries() const { return entries_; }
  bool is_zero() const;

  /// "(0, 1, 0)"
  std::string str() const;

  friend bool operator==(const QuasiType&, const QuasiType&) = default;

 private:
  std::vector<long long> entries_;
};

/// Outcome of the type computation.  The type exists only when the two
/// complexes share a dimension; otherwise both f-vectors are still reported.
struct QuasiTypeResult {
  std::optional<QuasiType> type;
  FVector facet_f;
  FVector nonface_f;

  bool is_quasi() const { return type.has_value(); }
};

/// Requires a nonzero ideal with full support.
QuasiTypeResult quasi_type(const Ideal& ideal);

/// True iff the type exists and is the zero vector.
bool is_f_ideal(const Ideal& ideal);

struct ConditionResult {
  std::string name;
  bool holds;
  std::string detail;
};

/// Structured outcome of a degree-2 characterization.  The verdict is the
/// conjunction of the listed conditions; b is always derived from |G(I)| as
/// C(n,2) - 2|G(I)|, never taken as input.
struct CharacterizationReport {
  int n = 0;
  long long generator_count = 0;
  long long b = 0;
  std::optional<int> height_value;
  std::vector<ConditionResult> conditions;
  bool verdict = false;
};

/// Algebraic route for equigenerated degree-2 ideals with full support:
/// height n-2, matching parity of C(n,2) and b, and |G(I)| = (C(n,2)-b)/2.
CharacterizationReport height_characterization(const Ideal& ideal);

/// Combinatorial route: same parity and cardinality conditions, with the
/// height condition replaced by G(I) being upper perfect; also records the
/// |b| < C(n,2) domain condition under which the routes coincide.
CharacterizationReport upper_perfect_characterization(const Ideal& ideal);

/// Inclusive range of b values a degree-2 quasi type (0,b) can take:
/// -C(n,2)+2 .. C(n,2) - 2 N(n,2).
std::pair<long long, long long> type_bounds(int n);

/// Within bounds and of the same parity as C(n,2).
bool is_admissible_type(int n, long long b);

/// The monomial prime (x_i : i in vars).
class PrimeIdeal {
 public:
  explicit PrimeIdeal(Monomial vars);

  const Monomial& vars() const { return vars_; }
  int height() const { return vars_.degree(); }

  /// "(x2,x3)"
  std::string str() const;

  friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
  friend bool operator<(const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.vars_ < b.vars_;
  }

 private:
  Monomial vars_;
};

/// Minimal primes of a nonzero square-free ideal: the minimal transversals
/// of the generator supports (equivalently, complements of the non-face
/// complex facets).  For square-free ideals these are all associated primes.
std::vector<PrimeIdeal> minimal_primes(const Ideal& ideal);

/// Membership test for primes of height n-2 or n-1 over a degree-2 quasi
/// ideal, evaluated purely from G(I): a height n-2 prime is minimal iff the
/// one pair outside it is not a generator; a height n-1 prime is minimal iff
/// the one variable outside it pairs into G(I) with every other variable.
bool minimal_prime_criterion(const Ideal& ideal, const PrimeIdeal& prime);

}  // namespace quasif
