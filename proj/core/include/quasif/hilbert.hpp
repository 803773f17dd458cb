#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quasif/fvector.hpp"
#include "quasif/ideal.hpp"

namespace quasif {

/// A Hilbert series held two ways: as the term sum
///   sum_i c_i z^i / (1-z)^i        (c_0 = 1 for the empty face)
/// and as one fraction
///   numerator(z) / (denom_scalar * (1-z)^denom_exponent).
/// Everything is exact over the integers; the two forms agree as rational
/// functions (checkable by cross-multiplication).
struct RationalSeries {
  std::vector<std::pair<long long, int>> terms;  // (coefficient, power)
  std::vector<long long> numerator;              // ascending coefficients
  int denom_exponent = 0;
  long long denom_scalar = 1;

  /// Power-series coefficients up to z^order, computed from the normalized
  /// fraction.
  std::vector<long long> expand(int order) const;

  /// "1 + 5 z/(1-z) + 8 z^2/(1-z)^2 + 2 z^3/(1-z)^3"
  std::string term_sum_str() const;
  /// "(1 + 2 z + z^2) / (1-z)^2", with the scalar shown when not 1
  std::string normalized_str() const;
};

/// Equality as formal rational functions, by integer cross-multiplication.
bool rational_equal(const RationalSeries& a, const RationalSeries& b);

/// dim_k (R/I)_m from the f-vector of the non-face complex:
/// 1 for m = 0, otherwise sum_i C(m-1, i) f_i.
long long hilbert_function_from_fvector(const FVector& fvec, long long m);

/// Term sum 1 + f_0 z/(1-z) + ... + f_d z^{d+1}/(1-z)^{d+1}, normalized over
/// (1-z)^{d+1}.
RationalSeries hilbert_series_from_fvector(const FVector& fvec);

/// The linear closed form ((n^2-n+2b) z - n^2+5n-2b)/4 valid for degree-2
/// quasi ideals of type (0,b) at z >= 1.  Both coefficients are integral for
/// every admissible (n,b); evaluation at z = 1 gives n.
struct HilbertPolynomial {
  long long z_coeff_times4 = 0;
  long long const_coeff_times4 = 0;

  long long z_coeff() const { return z_coeff_times4 / 4; }
  long long const_coeff() const { return const_coeff_times4 / 4; }
  long long evaluate(long long m) const;

  /// "11z - 3"
  std::string str() const;
};

HilbertPolynomial hilbert_polynomial_deg2(int n, long long b);

/// (4 + 4(n-2) z + (n^2-5n+4+2b) z^2) / (4 (1-z)^2)
RationalSeries hilbert_series_deg2(int n, long long b);

/// Independent count of dim_k (R/I)_m: enumerates every degree-m monomial in
/// x_1..x_n and keeps those whose support contains no generator.  Feasible
/// while C(n+m-1, m) <= 10^7.
long long count_standard_monomials(const Ideal& ideal, long long m);

}  // namespace quasif
