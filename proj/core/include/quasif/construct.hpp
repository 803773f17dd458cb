#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quasif/classify.hpp"
#include "quasif/ideal.hpp"
#include "quasif/monomial.hpp"

namespace quasif {

/// A two-block partition of the variables, given by the block A.
/// Valid while A is a nonempty proper subset of {1..n}.
struct PartitionSpec {
  int n;
  Monomial a_set;
};

/// All pairs lying inside A plus all pairs inside its complement;
/// cardinality C(|A|,2) + C(n-|A|,2).
std::vector<Monomial> partition_set(const PartitionSpec& spec);

struct ConstructionResult {
  Ideal ideal;
  QuasiType claimed_type;
  Monomial a_set;
  std::vector<Monomial> w_a;
  std::vector<Monomial> d_set;
};

/// The ideal generated by partition_set(spec) alone, of quasi type
/// (0, (n - (n - 2|A|)^2) / 2).  The type is recomputed from the definition
/// before returning.  Blocks of size 1 or n-1 leave a vertex uncovered and
/// are reported as such.
ConstructionResult partition_ideal(const PartitionSpec& spec);

/// Block used by construct_of_type: {1..2t} when n = 4t or 4t+1,
/// {1..2t+1} when n = 4t+2 or 4t+3.
Monomial default_partition_block(int n);

/// Realizes the admissible type (0,b) as W_A plus the lexicographically
/// smallest padding set D of the right size.  Explicit overrides for A and D
/// are accepted and verified the same way; the result is always checked
/// against the definition before being returned.
ConstructionResult construct_of_type(int n, long long b,
                                     std::optional<Monomial> a_override = std::nullopt,
                                     std::optional<std::vector<Monomial>> d_override = std::nullopt);

struct EnumerationResult {
  long long count = 0;                 // labeled ideals found
  std::vector<Ideal> ideals;           // representatives (all, or one per orbit)
  std::vector<long long> orbit_sizes;  // aligned with ideals when up_to_symmetry
  bool up_to_symmetry = false;
  bool truncated = false;              // ideal list hit the cap; count stays exact
};

/// Every equigenerated degree-2 full-support ideal on n variables of quasi
/// type (0,b), found by scanning all generator sets of the forced size
/// (C(n,2)-b)/2 and checking the type from the definition.  With
/// up_to_symmetry, one representative per orbit of the vertex-permutation
/// action (canonical form: minimum edge bitmask over all n! relabelings).
/// Supported for 4 <= n <= 7.
EnumerationResult enumerate_quasi(int n, long long b, bool up_to_symmetry,
                                  std::size_t cap = 10000);

}  // namespace quasif
