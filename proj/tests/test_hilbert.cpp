#include <doctest.h>

#include <random>

#include "quasif/classify.hpp"
#include "quasif/construct.hpp"
#include "quasif/errors.hpp"
#include "quasif/hilbert.hpp"
#include "quasif/simplicial_complex.hpp"

using namespace quasif;

namespace {

Ideal make(int n, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(parse_monomial(g, n));
  return minimalize(std::move(ms), n);
}

const Ideal kIntro = make(5, {"x1x2", "x3x4", "x1x3x5", "x2x4x5"});

}  // namespace

TEST_CASE("Hilbert function from an f-vector") {
  CHECK(hilbert_function_from_fvector(FVector({5, 8, 2}), 0) == 1);
  CHECK(hilbert_function_from_fvector(FVector({5, 8, 2}), 1) == 5);
  CHECK(hilbert_function_from_fvector(FVector({5, 8, 2}), 2) == 13);
  CHECK(hilbert_function_from_fvector(FVector({4, 4}), 3) == 12);
  CHECK(hilbert_function_from_fvector(FVector({7, 21, 18}), 0) == 1);
  CHECK_THROWS_AS(hilbert_function_from_fvector(FVector({3}), -1), DomainError);
}

TEST_CASE("Hilbert series from an f-vector") {
  const auto series = hilbert_series_from_fvector(FVector({5, 8, 2}));
  CHECK(series.term_sum_str() == "1 + 5 z/(1-z) + 8 z^2/(1-z)^2 + 2 z^3/(1-z)^3");
  CHECK(series.denom_exponent == 3);
  CHECK(series.denom_scalar == 1);

  const auto corrected = hilbert_series_from_fvector(FVector({5, 10, 5}));
  CHECK(corrected.terms == std::vector<std::pair<long long, int>>{{1, 0}, {5, 1}, {10, 2}, {5, 3}});

  const auto points = hilbert_series_from_fvector(FVector({4}));
  CHECK(points.term_sum_str() == "1 + 4 z/(1-z)");
  CHECK(points.numerator == std::vector<long long>{1, 3});  // (1-z) + 4z
  CHECK(points.denom_exponent == 1);
}

TEST_CASE("series expansion equals the Hilbert function, for orders up to 12") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<long long> entries;
    const int dim = static_cast<int>(rng() % 4);
    for (int i = 0; i <= dim; ++i) entries.push_back(1 + rng() % 20);
    const FVector fvec(entries);
    const auto series = hilbert_series_from_fvector(fvec);
    const auto coeffs = series.expand(12);
    for (int m = 0; m <= 12; ++m) {
      CHECK(coeffs[static_cast<std::size_t>(m)] == hilbert_function_from_fvector(fvec, m));
    }
  }
}

TEST_CASE("degree-2 closed forms") {
  const auto poly = hilbert_polynomial_deg2(8, -6);
  CHECK(poly.z_coeff() == 11);
  CHECK(poly.const_coeff() == -3);
  CHECK(poly.str() == "11z - 3");
  CHECK(poly.evaluate(1) == 8);

  const auto linear = hilbert_polynomial_deg2(4, 2);
  CHECK(linear.z_coeff() == 4);
  CHECK(linear.const_coeff() == 0);
  for (long long m = 1; m <= 6; ++m) CHECK(linear.evaluate(m) == 4 * m);

  // Evaluation at 1 returns the vertex count for every admissible pair.
  for (int n = 4; n <= 10; ++n) {
    const auto [lo, hi] = type_bounds(n);
    for (long long b = lo; b <= hi; b += 2) {
      CHECK(hilbert_polynomial_deg2(n, b).evaluate(1) == n);
    }
  }

  CHECK_THROWS_AS(hilbert_polynomial_deg2(8, 3), DomainError);
  CHECK_THROWS_AS(hilbert_polynomial_deg2(3, 0), DomainError);
}

TEST_CASE("degree-2 series matches the f-vector series by cross-multiplication") {
  const auto series = hilbert_series_deg2(4, 2);
  CHECK(series.numerator == std::vector<long long>{4, 8, 4});
  CHECK(series.denom_scalar == 4);
  CHECK(series.denom_exponent == 2);
  CHECK(rational_equal(series, hilbert_series_from_fvector(FVector({4, 4}))));

  const auto wide = hilbert_series_deg2(8, -6);
  CHECK(wide.numerator == std::vector<long long>{4, 24, 16});

  for (int n = 4; n <= 10; ++n) {
    const auto [lo, hi] = type_bounds(n);
    for (long long b = lo; b <= hi; b += 2) {
      const long long f1 = (binom(n, 2) + b) / 2;
      CHECK(rational_equal(hilbert_series_deg2(n, b),
                           hilbert_series_from_fvector(FVector({n, f1}))));
    }
  }

  // Expansion of the (4,2) series: 1, then 4m.
  const auto coeffs = hilbert_series_deg2(4, 2).expand(6);
  CHECK(coeffs == std::vector<long long>{1, 4, 8, 12, 16, 20, 24});
}

TEST_CASE("closed-form coefficients are integral for every admissible pair up to n = 12") {
  for (int n = 4; n <= 12; ++n) {
    const auto [lo, hi] = type_bounds(n);
    for (long long b = lo; b <= hi; b += 2) {
      const long long nn = n;
      CHECK((nn * nn - nn + 2 * b) % 4 == 0);
      CHECK((-nn * nn + 5 * nn - 2 * b) % 4 == 0);
    }
  }
}

TEST_CASE("standard monomial counting") {
  CHECK(count_standard_monomials(kIntro, 2) == 13);
  CHECK(count_standard_monomials(make(4, {"x1x2", "x3x4"}), 2) == 8);
  CHECK(count_standard_monomials(kIntro, 0) == 1);
  CHECK(count_standard_monomials(Ideal::zero(3), 4) == binom(3 + 4 - 1, 4));
  CHECK_THROWS_AS(count_standard_monomials(kIntro, -1), DomainError);
  CHECK_THROWS_AS(count_standard_monomials(Ideal::zero(30), 30), DomainError);
}

TEST_CASE("counting oracle agrees with the f-vector route") {
  SUBCASE("exhaustive degree-2 ideals for n = 2..5") {
    for (int n = 2; n <= 5; ++n) {
      const auto pairs = sm_universe(n, 2);
      for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << pairs.size()); ++sel) {
        std::vector<Monomial> gens;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          if ((sel >> k) & 1U) gens.push_back(pairs[k]);
        }
        const Ideal ideal = minimalize(std::move(gens), n);
        const auto fv = f_vector(stanley_reisner_complex(ideal));
        for (long long m = 0; m <= 5; ++m) {
          CHECK(hilbert_function_from_fvector(fv, m) == count_standard_monomials(ideal, m));
        }
      }
    }
  }
  SUBCASE("random mixed-degree ideals on up to 6 variables") {
    std::mt19937 rng(1618);
    int checked = 0;
    while (checked < 250) {
      const int n = 3 + static_cast<int>(rng() % 4);
      std::vector<Monomial> gens;
      const int count = 1 + static_cast<int>(rng() % 5);
      for (int i = 0; i < count; ++i) {
        const std::uint64_t mask = rng() & full_mask(n);
        if (std::popcount(mask) < 2) continue;
        gens.push_back(Monomial::from_mask(mask));
      }
      if (gens.empty()) continue;
      const Ideal ideal = minimalize(std::move(gens), n);
      const auto fv = f_vector(stanley_reisner_complex(ideal));
      for (long long m = 0; m <= 5; ++m) {
        CHECK(hilbert_function_from_fvector(fv, m) == count_standard_monomials(ideal, m));
      }
      ++checked;
    }
  }
}

TEST_CASE("closed forms agree with the oracle on enumerated quasi ideals") {
  for (int n = 4; n <= 6; ++n) {
    const auto [lo, hi] = type_bounds(n);
    for (long long b = lo; b <= hi; b += 2) {
      const auto census = enumerate_quasi(n, b, false);
      const auto poly = hilbert_polynomial_deg2(n, b);
      const auto series = hilbert_series_deg2(n, b);
      for (const auto& ideal : census.ideals) {
        const auto fv = f_vector(stanley_reisner_complex(ideal));
        for (long long m = 1; m <= 5; ++m) {
          CHECK(poly.evaluate(m) == count_standard_monomials(ideal, m));
        }
        CHECK(rational_equal(series, hilbert_series_from_fvector(fv)));
      }
    }
  }
}
