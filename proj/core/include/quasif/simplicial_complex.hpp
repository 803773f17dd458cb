#pragma once

#include <vector>

#include "quasif/fvector.hpp"
#include "quasif/ideal.hpp"
#include "quasif/monomial.hpp"

namespace quasif {

using Face = Monomial;

/// A simplicial complex on vertices {1..n}, determined by its facets (the
/// maximal faces).  Construction normalizes the given faces to an antichain
/// and requires every vertex to lie in some facet; otherwise it reports the
/// uncovered vertices.
class SimplicialComplex {
 public:
  SimplicialComplex(int n, std::vector<Face> faces);

  int n() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_face(const Face& f) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_;
  std::vector<Face> facets_;
};

/// Facets are the supports of the minimal generators.  Requires a nonzero
/// ideal with full support.
SimplicialComplex facet_complex(const Ideal& ideal);

/// The non-face (Stanley-Reisner) complex: faces are the subsets whose
/// monomial lies outside the ideal.  Facets are computed as complements of
/// the minimal transversals of the generator supports.  An ideal containing
/// a variable leaves that vertex in no face and is rejected.
SimplicialComplex stanley_reisner_complex(const Ideal& ideal);

/// Counts all faces by expanding facet power sets into a deduplicating set;
/// supported for n <= 24.
FVector f_vector(const SimplicialComplex& complex);

/// max facet cardinality - 1
int dimension(const SimplicialComplex& complex);

/// Minimum cardinality of a transversal of the generator supports; equals
/// n - dim(non-face complex) - 1.
int height(const Ideal& ideal);

/// Generators are the facet supports; inverse of facet_complex.
Ideal facet_ideal(const SimplicialComplex& complex);

/// Generated by the minimal non-faces; inverse of stanley_reisner_complex.
/// The full simplex has no non-faces and maps to the zero ideal.
Ideal nonface_ideal(const SimplicialComplex& complex);

}  // namespace quasif
