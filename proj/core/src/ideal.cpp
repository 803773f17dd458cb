#include "quasif/ideal.hpp"

#include <algorithm>

#include "quasif/errors.hpp"

namespace quasif {

Ideal Ideal::zero(int n) {
  check_var_count(n);
  return Ideal(n, {});
}

bool Ideal::contains_generator(const Monomial& m) const {
  return std::binary_search(gens_.begin(), gens_.end(), m);
}

Ideal minimalize(std::vector<Monomial> gens, int n) {
  check_var_count(n);
  const std::uint64_t universe = full_mask(n);
  for (const Monomial& g : gens) {
    if (g.empty()) fail(Errc::EmptyGenerator, "the empty monomial cannot generate a proper ideal");
    if ((g.mask() & ~universe) != 0) {
      fail(Errc::OutOfRange, "generator " + g.str() + " uses variables beyond x" + std::to_string(n));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Degree-ascending order guarantees any divisor of g was seen before g.
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (const Monomial& g : gens) {
    bool dominated = false;
    for (const Monomial& k : kept) {
      if (k.divides(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(g);
  }
  return Ideal(n, std::move(kept));
}

Monomial support(const Ideal& ideal) {
  Monomial acc;
  for (const Monomial& g : ideal.generators()) acc = acc.unite(g);
  return acc;
}

bool has_full_support(const Ideal& ideal) {
  return support(ideal).mask() == full_mask(ideal.n());
}

bool is_equigenerated(const Ideal& ideal, int d) {
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() != d) return false;
  }
  return true;
}

int max_generator_degree(const Ideal& ideal) {
  int best = 0;
  for (const Monomial& g : ideal.generators()) best = std::max(best, g.degree());
  return best;
}

}  // namespace quasif
