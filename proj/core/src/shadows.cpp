#include "quasif/shadows.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>

#include "quasif/errors.hpp"

namespace quasif {

ShadowSet::ShadowSet(int n, int degree, std::vector<Monomial> members)
    : n_(n), degree_(degree), members_(std::move(members)) {
  check_var_count(n);
  if (degree < 0 || degree > n) {
    fail(Errc::DegreeOutOfRange, "shadow-set degree " + std::to_string(degree) +
                                     " outside 0.." + std::to_string(n));
  }
  const std::uint64_t universe = full_mask(n);
  for (const Monomial& m : members_) {
    if ((m.mask() & ~universe) != 0) {
      fail(Errc::OutOfRange, "member " + m.str() + " uses variables beyond x" + std::to_string(n));
    }
    if (m.degree() != degree) {
      fail(Errc::MixedDegree, "member " + m.str() + " has degree " +
                                  std::to_string(m.degree()) + ", expected " +
                                  std::to_string(degree));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ShadowSet upper_shadow(const ShadowSet& t) {
  if (t.degree() >= t.n()) {
    fail(Errc::DegreeOverflow, "no layer above degree " + std::to_string(t.degree()) +
                                   " in " + std::to_string(t.n()) + " variables");
  }
  std::vector<Monomial> out;
  for (const Monomial& g : t.members()) {
    for (int i = 1; i <= t.n(); ++i) {
      if (!g.contains(i)) out.push_back(g.with(i));
    }
  }
  return ShadowSet(t.n(), t.degree() + 1, std::move(out));
}

ShadowSet lower_shadow(const ShadowSet& t) {
  if (t.degree() < 1) {
    fail(Errc::DegreeUnderflow, "no layer below degree 0");
  }
  std::vector<Monomial> out;
  for (const Monomial& g : t.members()) {
    for (int i : g.vars()) out.push_back(g.without(i));
  }
  return ShadowSet(t.n(), t.degree() - 1, std::move(out));
}

bool is_upper_perfect(const ShadowSet& t) {
  return static_cast<long long>(upper_shadow(t).size()) ==
         binom(t.n(), t.degree() + 1);
}

bool is_lower_perfect(const ShadowSet& t) {
  return static_cast<long long>(lower_shadow(t).size()) ==
         binom(t.n(), t.degree() - 1);
}

bool is_perfect(const ShadowSet& t) {
  return is_upper_perfect(t) && is_lower_perfect(t);
}

long long perfect_number_formula(int n) {
  if (n < 4) {
    fail(Errc::UnsupportedN, "perfect-number formula requires n >= 4, got " + std::to_string(n));
  }
  long long t = n / 2;
  return (n % 2 == 0) ? t * t - t : t * t;
}

namespace {

// Layers neighbouring a degree-d universe of size <= 24 never exceed
// C(24,2) = 276 elements, so five words cover any shadow bitmap we meet.
struct LayerBits {
  std::array<std::uint64_t, 5> w{};

  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  LayerBits operator|(const LayerBits& o) const {
    LayerBits r;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  friend bool operator==(const LayerBits&, const LayerBits&) = default;
};

struct PerfectSearch {
  std::vector<LayerBits> up;     // per universe element
  std::vector<LayerBits> down;
  std::vector<LayerBits> up_suffix;    // OR of up[i..]
  std::vector<LayerBits> down_suffix;
  LayerBits up_full;
  LayerBits down_full;

  bool found_at(std::size_t start, int remaining, const LayerBits& cur_up,
                const LayerBits& cur_down) const {
    if (remaining == 0) return cur_up == up_full && cur_down == down_full;
    if (start >= up.size()) return false;
    if (!((cur_up | up_suffix[start]) == up_full)) return false;
    if (!((cur_down | down_suffix[start]) == down_full)) return false;
    for (std::size_t i = start; i + static_cast<std::size_t>(remaining) <= up.size(); ++i) {
      if (found_at(i + 1, remaining - 1, cur_up | up[i], cur_down | down[i])) return true;
    }
    return false;
  }
};

}  // namespace

long long perfect_number_bruteforce(int n, int d) {
  check_var_count(n);
  if (d < 1 || d >= n) {
    fail(Errc::DegreeOutOfRange, "perfect sets need 1 <= d < n; got d = " + std::to_string(d));
  }
  const long long universe_size = binom(n, d);
  if (universe_size > 24) {
    fail(Errc::SearchTooLarge, "C(" + std::to_string(n) + "," + std::to_string(d) +
                                   ") = " + std::to_string(universe_size) +
                                   " exceeds the 24-element search bound");
  }

  const auto universe = sm_universe(n, d);
  const auto upper_layer = sm_universe(n, d + 1);
  const auto lower_layer = sm_universe(n, d - 1);

  std::unordered_map<std::uint64_t, std::size_t> up_index, down_index;
  for (std::size_t i = 0; i < upper_layer.size(); ++i) up_index[upper_layer[i].mask()] = i;
  for (std::size_t i = 0; i < lower_layer.size(); ++i) down_index[lower_layer[i].mask()] = i;

  PerfectSearch search;
  search.up.resize(universe.size());
  search.down.resize(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const Monomial& g = universe[i];
    for (int v = 1; v <= n; ++v) {
      if (!g.contains(v)) search.up[i].set(up_index.at(g.with(v).mask()));
    }
    for (int v : g.vars()) {
      search.down[i].set(down_index.at(g.without(v).mask()));
    }
  }
  for (std::size_t i = 0; i < upper_layer.size(); ++i) search.up_full.set(i);
  for (std::size_t i = 0; i < lower_layer.size(); ++i) search.down_full.set(i);

  search.up_suffix.assign(universe.size() + 1, LayerBits{});
  search.down_suffix.assign(universe.size() + 1, LayerBits{});
  for (std::size_t i = universe.size(); i-- > 0;) {
    search.up_suffix[i] = search.up_suffix[i + 1] | search.up[i];
    search.down_suffix[i] = search.down_suffix[i + 1] | search.down[i];
  }

  // The full layer is perfect, so the search terminates.
  for (int k = 1; k <= static_cast<int>(universe.size()); ++k) {
    if (search.found_at(0, k, LayerBits{}, LayerBits{})) return k;
  }
  fail(Errc::InternalVerificationFailure, "no perfect subset found up to the full layer");
}

}  // namespace quasif
