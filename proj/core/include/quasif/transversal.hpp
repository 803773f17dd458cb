#pragma once

#include <span>
#include <vector>

#include "quasif/monomial.hpp"

namespace quasif {

/// All inclusion-minimal subsets of {1..n} meeting every edge, in canonical
/// order.  An empty edge makes the instance unhittable (result empty); an
/// empty edge list has the empty set as its unique minimal transversal.
///
/// Branches on the vertices of the first uncovered edge; a branch survives
/// only while every chosen vertex keeps an edge it alone covers, so each
/// minimal transversal is produced exactly once.
std::vector<Monomial> minimal_transversals(int n, std::span<const Monomial> edges);

/// Minimum transversal cardinality; -1 when no transversal exists.
int min_transversal_size(int n, std::span<const Monomial> edges);

}  // namespace quasif
