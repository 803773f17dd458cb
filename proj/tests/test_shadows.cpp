#include <doctest.h>

#include <random>

#include "quasif/errors.hpp"
#include "quasif/shadows.hpp"

using namespace quasif;

namespace {

ShadowSet make_set(int n, int degree, std::initializer_list<const char*> members) {
  std::vector<Monomial> ms;
  for (const char* m : members) ms.push_back(parse_monomial(m, n));
  return ShadowSet(n, degree, std::move(ms));
}

}  // namespace

TEST_CASE("shadow set construction validates degree uniformity") {
  CHECK_THROWS_AS(ShadowSet(4, 2, {parse_monomial("x1", 4)}), DomainError);
  CHECK_THROWS_AS(ShadowSet(4, 5, {}), DomainError);
  CHECK(ShadowSet(4, 2, {}).size() == 0);
}

TEST_CASE("upper shadow") {
  CHECK(upper_shadow(make_set(3, 2, {"x1x2"})).members() ==
        std::vector<Monomial>{parse_monomial("x1x2x3", 3)});

  const auto full_triples = upper_shadow(make_set(4, 2, {"x1x2", "x3x4"}));
  CHECK(full_triples.members() == sm_universe(4, 3));

  CHECK(upper_shadow(ShadowSet(4, 2, {})).size() == 0);
  CHECK_THROWS_AS(upper_shadow(make_set(3, 3, {"x1x2x3"})), DomainError);

  // Degree-0 sets lift to all singletons.
  CHECK(upper_shadow(ShadowSet(3, 0, {Monomial()})).members() == sm_universe(3, 1));
}

TEST_CASE("lower shadow") {
  CHECK(lower_shadow(make_set(2, 2, {"x1x2"})).members() == sm_universe(2, 1));
  CHECK(lower_shadow(make_set(4, 2, {"x1x2", "x3x4"})).members() == sm_universe(4, 1));
  CHECK(lower_shadow(make_set(5, 3, {"x1x2x3"})).members() ==
        std::vector<Monomial>{parse_monomial("x1x2", 5), parse_monomial("x1x3", 5),
                              parse_monomial("x2x3", 5)});
  CHECK_THROWS_AS(lower_shadow(ShadowSet(3, 0, {Monomial()})), DomainError);
}

TEST_CASE("perfect predicates on small sets") {
  CHECK(is_upper_perfect(make_set(4, 2, {"x1x2", "x3x4"})));
  CHECK_FALSE(is_upper_perfect(make_set(4, 2, {"x1x2", "x1x3", "x1x4"})));
  CHECK(is_perfect(make_set(4, 2, {"x1x2", "x3x4"})));
  CHECK_FALSE(is_perfect(make_set(4, 2, {"x1x2", "x1x3", "x2x3"})));
  CHECK_FALSE(is_perfect(ShadowSet(4, 2, {})));

  for (int n = 3; n <= 8; ++n) {
    CHECK(is_upper_perfect(ShadowSet(n, 2, sm_universe(n, 2))));
    CHECK(is_perfect(ShadowSet(n, 2, sm_universe(n, 2))));
  }
}

TEST_CASE("upper shadow is monotone in the set") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int d = 1 + static_cast<int>(rng() % (n - 1));
    const auto layer = sm_universe(n, d);
    std::vector<Monomial> small, large;
    for (const auto& m : layer) {
      const bool in_large = rng() % 2;
      if (in_large) {
        large.push_back(m);
        if (rng() % 2) small.push_back(m);
      }
    }
    const auto up_small = upper_shadow(ShadowSet(n, d, small)).members();
    const auto up_large = upper_shadow(ShadowSet(n, d, large)).members();
    CHECK(std::includes(up_large.begin(), up_large.end(), up_small.begin(), up_small.end()));
  }
}

TEST_CASE("supersets of perfect sets stay perfect, exhaustively for n = 3, 4, 5") {
  for (int n = 3; n <= 5; ++n) {
    const auto layer = sm_universe(n, 2);
    const std::uint64_t limit = std::uint64_t{1} << layer.size();
    std::vector<bool> perfect(limit);
    for (std::uint64_t sel = 0; sel < limit; ++sel) {
      std::vector<Monomial> members;
      for (std::size_t k = 0; k < layer.size(); ++k) {
        if ((sel >> k) & 1U) members.push_back(layer[k]);
      }
      perfect[sel] = is_perfect(ShadowSet(n, 2, members));
    }
    for (std::uint64_t sel = 0; sel < limit; ++sel) {
      if (!perfect[sel]) continue;
      for (std::uint64_t sup = sel; sup < limit; sup = (sup + 1) | sel) {
        CHECK(perfect[sup]);
      }
    }
  }
}

TEST_CASE("perfect number closed form") {
  CHECK(perfect_number_formula(4) == 2);
  CHECK(perfect_number_formula(5) == 4);
  CHECK(perfect_number_formula(6) == 6);
  CHECK(perfect_number_formula(7) == 9);
  CHECK(perfect_number_formula(8) == 12);
  CHECK(perfect_number_formula(10) == 20);
  CHECK_THROWS_AS(perfect_number_formula(3), DomainError);
}

TEST_CASE("perfect number brute force agrees with the formula for n = 4, 5, 6") {
  CHECK(perfect_number_bruteforce(4, 2) == 2);
  CHECK(perfect_number_bruteforce(5, 2) == 4);
  CHECK(perfect_number_bruteforce(6, 2) == 6);
  CHECK_THROWS_AS(perfect_number_bruteforce(8, 2), DomainError);  // C(8,2) = 28 > 24
  CHECK_THROWS_AS(perfect_number_bruteforce(4, 4), DomainError);

  // Degree away from 2: N(n,1) = n-1 (cover all pairs from above, the empty
  // monomial from below).
  CHECK(perfect_number_bruteforce(4, 1) == 3);
  CHECK(perfect_number_bruteforce(5, 1) == 4);
  // Degree n-1: the two top layers are tiny.
  CHECK(perfect_number_bruteforce(4, 3) == 3);
}
