#include "quasif/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "quasif/classify.hpp"
#include "quasif/errors.hpp"

namespace quasif {

namespace {

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<long long> one_minus_z_pow(int k) {
  std::vector<long long> out{1};
  for (int i = 0; i < k; ++i) out = poly_mul(out, {1, -1});
  return out;
}

std::vector<long long> trimmed(std::vector<long long> p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

std::vector<long long> RationalSeries::expand(int order) const {
  std::vector<long long> out(static_cast<std::size_t>(order) + 1, 0);
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    for (int m = static_cast<int>(j); m <= order; ++m) {
      out[static_cast<std::size_t>(m)] +=
          numerator[j] * binom(m - static_cast<long long>(j) + denom_exponent - 1,
                               denom_exponent - 1);
    }
  }
  for (long long& c : out) {
    if (c % denom_scalar != 0) {
      fail(Errc::InternalVerificationFailure, "series expansion is not integral");
    }
    c /= denom_scalar;
  }
  return out;
}

std::string RationalSeries::term_sum_str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, i] : terms) {
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
    } else if (i == 1) {
      os << c << " z/(1-z)";
    } else {
      os << c << " z^" << i << "/(1-z)^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string RationalSeries::normalized_str() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    const long long c = numerator[j];
    if (c == 0 && numerator.size() > 1) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const long long mag = c < 0 ? -c : c;
    if (j == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << " ";
      os << "z";
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  os << ") / ";
  if (denom_scalar != 1) os << "(" << denom_scalar << " (1-z)^" << denom_exponent << ")";
  else if (denom_exponent == 1) os << "(1-z)";
  else os << "(1-z)^" << denom_exponent;
  return os.str();
}

bool rational_equal(const RationalSeries& a, const RationalSeries& b) {
  // a.num * b.scalar * (1-z)^b.e  ==  b.num * a.scalar * (1-z)^a.e
  auto lhs = poly_mul(a.numerator, one_minus_z_pow(b.denom_exponent));
  for (long long& c : lhs) c *= b.denom_scalar;
  auto rhs = poly_mul(b.numerator, one_minus_z_pow(a.denom_exponent));
  for (long long& c : rhs) c *= a.denom_scalar;
  return trimmed(std::move(lhs)) == trimmed(std::move(rhs));
}

long long hilbert_function_from_fvector(const FVector& fvec, long long m) {
  if (m < 0) fail(Errc::NegativeDegree, "Hilbert function argument must be >= 0");
  if (m == 0) return 1;
  long long total = 0;
  for (std::size_t i = 0; i < fvec.size(); ++i) {
    total += binom(m - 1, static_cast<long long>(i)) * fvec[i];
  }
  return total;
}

RationalSeries hilbert_series_from_fvector(const FVector& fvec) {
  RationalSeries series;
  series.terms.emplace_back(1, 0);
  for (std::size_t i = 0; i < fvec.size(); ++i) {
    series.terms.emplace_back(fvec[i], static_cast<int>(i) + 1);
  }
  series.denom_exponent = static_cast<int>(fvec.size());
  series.denom_scalar = 1;
  // sum_i c_i z^i (1-z)^(e-i)
  std::vector<long long> num(1, 0);
  for (const auto& [c, i] : series.terms) {
    std::vector<long long> term = one_minus_z_pow(series.denom_exponent - i);
    term.insert(term.begin(), static_cast<std::size_t>(i), 0);  // times z^i
    for (long long& coeff : term) coeff *= c;
    if (term.size() > num.size()) num.resize(term.size(), 0);
    for (std::size_t j = 0; j < term.size(); ++j) num[j] += term[j];
  }
  series.numerator = trimmed(std::move(num));
  return series;
}

long long HilbertPolynomial::evaluate(long long m) const {
  const long long raw = z_coeff_times4 * m + const_coeff_times4;
  return raw / 4;
}

std::string HilbertPolynomial::str() const {
  std::ostringstream os;
  const long long zc = z_coeff();
  const long long cc = const_coeff();
  if (zc == 1) os << "z";
  else if (zc == -1) os << "-z";
  else os << zc << "z";
  if (cc > 0) os << " + " << cc;
  else if (cc < 0) os << " - " << -cc;
  return os.str();
}

namespace {

void require_admissible(int n, long long b) {
  if (!is_admissible_type(n, b)) {
    fail(Errc::InadmissibleType, "(0, " + std::to_string(b) + ") is not admissible for n = " +
                                     std::to_string(n));
  }
}

}  // namespace

HilbertPolynomial hilbert_polynomial_deg2(int n, long long b) {
  require_admissible(n, b);
  const long long nn = n;
  HilbertPolynomial poly{nn * nn - nn + 2 * b, -nn * nn + 5 * nn - 2 * b};
  if (poly.z_coeff_times4 % 4 != 0 || poly.const_coeff_times4 % 4 != 0) {
    fail(Errc::InternalVerificationFailure, "closed-form coefficients are not integral");
  }
  return poly;
}

RationalSeries hilbert_series_deg2(int n, long long b) {
  require_admissible(n, b);
  const long long nn = n;
  RationalSeries series;
  series.numerator = {4, 4 * (nn - 2), nn * nn - 5 * nn + 4 + 2 * b};
  series.denom_exponent = 2;
  series.denom_scalar = 4;
  const long long f1 = (binom(n, 2) + b) / 2;  // edge count of the non-face complex
  series.terms = {{1, 0}, {nn, 1}, {f1, 2}};
  return series;
}

long long count_standard_monomials(const Ideal& ideal, long long m) {
  if (m < 0) fail(Errc::NegativeDegree, "monomial degree must be >= 0");
  const long long lattice = binom(ideal.n() + m - 1, m);
  if (lattice > 10'000'000LL) {
    fail(Errc::TooLarge, "C(n+m-1, m) = " + std::to_string(lattice) +
                             " exceeds the 10^7 enumeration bound");
  }

  const auto& gens = ideal.generators();
  long long count = 0;
  // Distribute degree m over the variables; prune as soon as the support
  // picks up a full generator, since it only grows along a branch.
  auto walk = [&](auto&& self, int var, long long remaining, std::uint64_t supp) -> void {
    if (var > ideal.n()) {
      if (remaining == 0) ++count;
      return;
    }
    self(self, var + 1, remaining, supp);  // exponent 0
    if (remaining == 0) return;
    const std::uint64_t extended = supp | (std::uint64_t{1} << (var - 1));
    for (const Monomial& g : gens) {
      if ((g.mask() & extended) == g.mask()) return;
    }
    for (long long e = 1; e <= remaining; ++e) {
      self(self, var + 1, remaining - e, extended);
    }
  };
  walk(walk, 1, m, 0);
  return count;
}

}  // namespace quasif
