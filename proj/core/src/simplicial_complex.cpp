#include "quasif/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "quasif/errors.hpp"
#include "quasif/transversal.hpp"

namespace quasif {

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> faces) : n_(n) {
  check_var_count(n);
  const std::uint64_t universe = full_mask(n);
  for (const Face& f : faces) {
    if ((f.mask() & ~universe) != 0) {
      fail(Errc::OutOfRange, "face " + f.set_str() + " uses vertices beyond " + std::to_string(n));
    }
  }

  // Keep the maximal faces only.  Descending degree makes one pass enough.
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::reverse(faces.begin(), faces.end());
  std::uint64_t covered = 0;
  for (const Face& f : faces) {
    if (f.empty()) continue;
    bool dominated = false;
    for (const Face& kept : facets_) {
      if (f.divides(kept)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      facets_.push_back(f);
      covered |= f.mask();
    }
  }
  std::sort(facets_.begin(), facets_.end());

  if (covered != universe) {
    std::vector<int> missing = Monomial::from_mask(universe & ~covered).vars();
    throw UncoveredVerticesError(std::move(missing));
  }
}

bool SimplicialComplex::is_face(const Face& f) const {
  for (const Face& facet : facets_) {
    if (f.divides(facet)) return true;
  }
  return false;
}

SimplicialComplex facet_complex(const Ideal& ideal) {
  if (ideal.is_zero()) fail(Errc::ZeroIdeal, "the zero ideal has no facet complex");
  return SimplicialComplex(ideal.n(), ideal.generators());
}

SimplicialComplex stanley_reisner_complex(const Ideal& ideal) {
  if (ideal.is_zero()) fail(Errc::ZeroIdeal, "the zero ideal has no non-face complex");
  const int n = ideal.n();
  const auto covers = minimal_transversals(n, ideal.generators());
  std::vector<Face> facets;
  facets.reserve(covers.size());
  for (const Monomial& t : covers) facets.push_back(t.complement(n));
  return SimplicialComplex(n, std::move(facets));
}

FVector f_vector(const SimplicialComplex& complex) {
  if (complex.n() > 24) {
    fail(Errc::TooLarge, "face expansion supports n <= 24, got n = " + std::to_string(complex.n()));
  }
  std::unordered_set<std::uint64_t> faces;
  for (const Face& facet : complex.facets()) {
    for (std::uint64_t sub = facet.mask(); sub; sub = (sub - 1) & facet.mask()) {
      faces.insert(sub);
    }
  }
  std::vector<long long> counts(static_cast<std::size_t>(dimension(complex)) + 1, 0);
  for (std::uint64_t f : faces) {
    ++counts[static_cast<std::size_t>(std::popcount(f)) - 1];
  }
  return FVector(std::move(counts));
}

int dimension(const SimplicialComplex& complex) {
  int best = 0;
  for (const Face& f : complex.facets()) best = std::max(best, f.degree());
  return best - 1;
}

int height(const Ideal& ideal) {
  if (ideal.is_zero()) fail(Errc::ZeroIdeal, "the zero ideal has no height");
  return min_transversal_size(ideal.n(), ideal.generators());
}

Ideal facet_ideal(const SimplicialComplex& complex) {
  return minimalize(complex.facets(), complex.n());
}

Ideal nonface_ideal(const SimplicialComplex& complex) {
  // S is a non-face iff S meets the complement of every facet, so the
  // minimal non-faces are the minimal transversals of those complements.
  const int n = complex.n();
  std::vector<Monomial> co_facets;
  co_facets.reserve(complex.facets().size());
  for (const Face& f : complex.facets()) co_facets.push_back(f.complement(n));
  auto gens = minimal_transversals(n, co_facets);
  if (gens.empty()) return Ideal::zero(n);
  return minimalize(std::move(gens), n);
}

}  // namespace quasif
