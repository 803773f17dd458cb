#include "quasif/construct.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "quasif/errors.hpp"

namespace quasif {

namespace {

void validate_spec(const PartitionSpec& spec) {
  check_var_count(spec.n);
  if ((spec.a_set.mask() & ~full_mask(spec.n)) != 0) {
    fail(Errc::InvalidA, "A uses variables beyond x" + std::to_string(spec.n));
  }
  const int size = spec.a_set.degree();
  if (size < 1 || size > spec.n - 1) {
    fail(Errc::InvalidA, "A must be a nonempty proper subset of {1.." +
                             std::to_string(spec.n) + "}");
  }
}

void require_support_covers(const Ideal& ideal) {
  const std::uint64_t missing = full_mask(ideal.n()) & ~support(ideal).mask();
  if (missing) throw UncoveredVerticesError(Monomial::from_mask(missing).vars());
}

}  // namespace

std::vector<Monomial> partition_set(const PartitionSpec& spec) {
  validate_spec(spec);
  std::vector<Monomial> out;
  for (const Monomial& pair : sm_universe(spec.n, 2)) {
    const std::uint64_t inside = pair.mask() & spec.a_set.mask();
    if (inside == pair.mask() || inside == 0) out.push_back(pair);
  }
  return out;
}

ConstructionResult partition_ideal(const PartitionSpec& spec) {
  auto w_a = partition_set(spec);
  Ideal ideal = minimalize(w_a, spec.n);
  require_support_covers(ideal);

  const long long a = spec.a_set.degree();
  const long long skew = spec.n - 2 * a;
  const QuasiType claimed = QuasiType::pair(0, (spec.n - skew * skew) / 2);

  const auto computed = quasi_type(ideal);
  if (!computed.is_quasi() || *computed.type != claimed) {
    fail(Errc::InternalVerificationFailure,
         "partition ideal type mismatch: expected " + claimed.str());
  }
  return {std::move(ideal), claimed, spec.a_set, std::move(w_a), {}};
}

Monomial default_partition_block(int n) {
  check_var_count(n);
  const int t = n / 4;
  const int size = (n % 4 <= 1) ? 2 * t : 2 * t + 1;
  return Monomial::from_mask((std::uint64_t{1} << size) - 1);
}

ConstructionResult construct_of_type(int n, long long b,
                                     std::optional<Monomial> a_override,
                                     std::optional<std::vector<Monomial>> d_override) {
  if (!is_admissible_type(n, b)) {
    fail(Errc::InadmissibleType, "(0, " + std::to_string(b) + ") is not admissible for n = " +
                                     std::to_string(n));
  }
  const Monomial a_set = a_override.value_or(default_partition_block(n));
  const PartitionSpec spec{n, a_set};
  auto w_a = partition_set(spec);

  const long long target = (binom(n, 2) - b) / 2;
  const long long padding = target - static_cast<long long>(w_a.size());
  if (padding < 0) {
    fail(Errc::InvalidA, "block leaves |W_A| = " + std::to_string(w_a.size()) +
                             " > (C(n,2) - b)/2 = " + std::to_string(target));
  }

  std::vector<Monomial> d_set;
  if (d_override) {
    d_set = std::move(*d_override);
    std::sort(d_set.begin(), d_set.end());
    d_set.erase(std::unique(d_set.begin(), d_set.end()), d_set.end());
    if (static_cast<long long>(d_set.size()) != padding) {
      fail(Errc::InvalidD, "D must contain exactly " + std::to_string(padding) +
                               " distinct monomials, got " + std::to_string(d_set.size()));
    }
    for (const Monomial& m : d_set) {
      if (m.degree() != 2 || (m.mask() & ~full_mask(n)) != 0) {
        fail(Errc::InvalidD, "D member " + m.str() + " is not a degree-2 monomial in x1..x" +
                                 std::to_string(n));
      }
      if (std::binary_search(w_a.begin(), w_a.end(), m)) {
        fail(Errc::InvalidD, "D member " + m.str() + " already lies in W_A");
      }
    }
  } else {
    for (const Monomial& pair : sm_universe(n, 2)) {
      if (static_cast<long long>(d_set.size()) == padding) break;
      if (!std::binary_search(w_a.begin(), w_a.end(), pair)) d_set.push_back(pair);
    }
    if (static_cast<long long>(d_set.size()) != padding) {
      fail(Errc::InvalidD, "not enough monomials outside W_A to reach |G(I)| = " +
                               std::to_string(target));
    }
  }

  std::vector<Monomial> gens = w_a;
  gens.insert(gens.end(), d_set.begin(), d_set.end());
  Ideal ideal = minimalize(std::move(gens), n);
  require_support_covers(ideal);

  const QuasiType claimed = QuasiType::pair(0, b);
  const auto computed = quasi_type(ideal);
  if (!computed.is_quasi() || *computed.type != claimed) {
    fail(Errc::InternalVerificationFailure,
         "constructed ideal has type " +
             (computed.is_quasi() ? computed.type->str() : std::string("<none>")) +
             ", wanted " + claimed.str());
  }
  return {std::move(ideal), claimed, a_set, std::move(w_a), std::move(d_set)};
}

namespace {

// Edge-subset bitmasks over the canonical ordering of sm_universe(n, 2).
struct PairIndexer {
  int n;
  std::vector<Monomial> pairs;
  int index_of[65][65];

  explicit PairIndexer(int n_vars) : n(n_vars), pairs(sm_universe(n_vars, 2)) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto vs = pairs[k].vars();
      index_of[vs[0]][vs[1]] = static_cast<int>(k);
    }
  }

  std::uint32_t permute(std::uint32_t mask, const std::vector<int>& perm) const {
    std::uint32_t out = 0;
    while (mask) {
      const int k = std::countr_zero(mask);
      mask &= mask - 1;
      const auto vs = pairs[static_cast<std::size_t>(k)].vars();
      int a = perm[static_cast<std::size_t>(vs[0] - 1)];
      int c = perm[static_cast<std::size_t>(vs[1] - 1)];
      if (a > c) std::swap(a, c);
      out |= std::uint32_t{1} << index_of[a][c];
    }
    return out;
  }

  Ideal to_ideal(std::uint32_t mask) const {
    std::vector<Monomial> gens;
    while (mask) {
      const int k = std::countr_zero(mask);
      mask &= mask - 1;
      gens.push_back(pairs[static_cast<std::size_t>(k)]);
    }
    return minimalize(std::move(gens), n);
  }
};

}  // namespace

EnumerationResult enumerate_quasi(int n, long long b, bool up_to_symmetry, std::size_t cap) {
  if (n < 4 || n > 7) {
    fail(Errc::SearchTooLarge, "enumeration supports 4 <= n <= 7, got n = " + std::to_string(n));
  }

  EnumerationResult result;
  result.up_to_symmetry = up_to_symmetry;

  const long long pairs = binom(n, 2);
  if ((pairs - b) % 2 != 0) return result;
  const long long r = (pairs - b) / 2;
  if (r < 1 || r > pairs) return result;

  const PairIndexer indexer(n);
  const std::uint64_t vertices = full_mask(n);
  const QuasiType wanted = QuasiType::pair(0, b);

  std::vector<std::uint32_t> found;
  std::vector<int> pick(static_cast<std::size_t>(r));
  // Fixed-size combinations over the pair universe, lexicographic.
  auto scan = [&](auto&& self, std::size_t depth, int start, std::uint64_t covered) -> void {
    if (depth == pick.size()) {
      if (covered != vertices) return;
      std::vector<Monomial> gens;
      gens.reserve(pick.size());
      for (int k : pick) gens.push_back(indexer.pairs[static_cast<std::size_t>(k)]);
      const auto qt = quasi_type(minimalize(std::move(gens), n));
      if (qt.is_quasi() && *qt.type == wanted) {
        std::uint32_t mask = 0;
        for (int k : pick) mask |= std::uint32_t{1} << k;
        found.push_back(mask);
      }
      return;
    }
    const int remaining = static_cast<int>(pick.size() - depth);
    for (int k = start; k <= static_cast<int>(indexer.pairs.size()) - remaining; ++k) {
      pick[depth] = k;
      self(self, depth + 1, k + 1, covered | indexer.pairs[static_cast<std::size_t>(k)].mask());
    }
  };
  scan(scan, 0, 0, 0);

  result.count = static_cast<long long>(found.size());

  if (!up_to_symmetry) {
    for (std::uint32_t mask : found) {
      if (result.ideals.size() >= cap) {
        result.truncated = true;
        break;
      }
      result.ideals.push_back(indexer.to_ideal(mask));
    }
    return result;
  }

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::map<std::uint32_t, long long> orbits;
  for (std::uint32_t mask : found) {
    std::uint32_t canon = mask;
    for (const auto& perm : perms) {
      canon = std::min(canon, indexer.permute(mask, perm));
    }
    ++orbits[canon];
  }
  for (const auto& [canon, size] : orbits) {
    if (result.ideals.size() >= cap) {
      result.truncated = true;
      break;
    }
    result.ideals.push_back(indexer.to_ideal(canon));
    result.orbit_sizes.push_back(size);
  }
  return result;
}

}  // namespace quasif
