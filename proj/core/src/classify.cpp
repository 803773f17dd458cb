#include "quasif/classify.hpp"

#include <algorithm>
#include <sstream>

#include "quasif/errors.hpp"
#include "quasif/shadows.hpp"
#include "quasif/transversal.hpp"

namespace quasif {

QuasiType::QuasiType(std::vector<long long> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) fail(Errc::OutOfRange, "a quasi type has at least one entry");
}

bool QuasiType::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](long long e) { return e == 0; });
}

std::string QuasiType::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i];
  }
  os << ")";
  return os.str();
}

namespace {

void require_nonzero(const Ideal& ideal) {
  if (ideal.is_zero()) fail(Errc::ZeroIdeal, "operation rejects the zero ideal");
}

void require_full_support(const Ideal& ideal) {
  const std::uint64_t missing = full_mask(ideal.n()) & ~support(ideal).mask();
  if (missing) {
    throw UncoveredVerticesError(Monomial::from_mask(missing).vars());
  }
}

// Shared entry checks plus the quantities every degree-2 report carries.
struct Deg2Context {
  int n;
  long long r;        // |G(I)|
  long long pairs;    // C(n,2)
  long long b;        // C(n,2) - 2r
};

Deg2Context deg2_context(const Ideal& ideal) {
  require_nonzero(ideal);
  if (!is_equigenerated(ideal, 2)) {
    fail(Errc::NotEquigenerated, "characterization requires every generator to have degree 2");
  }
  require_full_support(ideal);
  Deg2Context ctx;
  ctx.n = ideal.n();
  ctx.r = static_cast<long long>(ideal.generator_count());
  ctx.pairs = binom(ctx.n, 2);
  ctx.b = ctx.pairs - 2 * ctx.r;
  return ctx;
}

std::string parity_detail(const Deg2Context& ctx) {
  std::ostringstream os;
  os << "C(" << ctx.n << ",2) = " << ctx.pairs << " is " << (ctx.pairs % 2 ? "odd" : "even")
     << ", b = " << ctx.b << " is " << (((ctx.b % 2) + 2) % 2 ? "odd" : "even");
  return os.str();
}

std::string cardinality_detail(const Deg2Context& ctx) {
  std::ostringstream os;
  os << "|G(I)| = " << ctx.r << " = (" << ctx.pairs << " - " << ctx.b << ")/2";
  return os.str();
}

}  // namespace

QuasiTypeResult quasi_type(const Ideal& ideal) {
  require_nonzero(ideal);
  require_full_support(ideal);
  const auto facet = facet_complex(ideal);
  const auto nonface = stanley_reisner_complex(ideal);
  QuasiTypeResult result{std::nullopt, f_vector(facet), f_vector(nonface)};
  if (result.facet_f.size() == result.nonface_f.size()) {
    std::vector<long long> diff(result.facet_f.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = result.nonface_f[i] - result.facet_f[i];
    }
    result.type = QuasiType(std::move(diff));
  }
  return result;
}

bool is_f_ideal(const Ideal& ideal) {
  const auto result = quasi_type(ideal);
  return result.is_quasi() && result.type->is_zero();
}

CharacterizationReport height_characterization(const Ideal& ideal) {
  const Deg2Context ctx = deg2_context(ideal);
  CharacterizationReport report;
  report.n = ctx.n;
  report.generator_count = ctx.r;
  report.b = ctx.b;
  report.height_value = height(ideal);

  {
    std::ostringstream os;
    os << "ht(I) = " << *report.height_value << ", n - 2 = " << ctx.n - 2;
    report.conditions.push_back({"height equals n-2", *report.height_value == ctx.n - 2, os.str()});
  }
  report.conditions.push_back(
      {"parity of C(n,2) matches parity of b", ((ctx.pairs - ctx.b) % 2) == 0, parity_detail(ctx)});
  report.conditions.push_back(
      {"|G(I)| = (C(n,2) - b)/2", 2 * ctx.r == ctx.pairs - ctx.b, cardinality_detail(ctx)});

  report.verdict = std::all_of(report.conditions.begin(), report.conditions.end(),
                               [](const ConditionResult& c) { return c.holds; });
  return report;
}

CharacterizationReport upper_perfect_characterization(const Ideal& ideal) {
  const Deg2Context ctx = deg2_context(ideal);
  CharacterizationReport report;
  report.n = ctx.n;
  report.generator_count = ctx.r;
  report.b = ctx.b;

  report.conditions.push_back(
      {"parity of C(n,2) matches parity of b", ((ctx.pairs - ctx.b) % 2) == 0, parity_detail(ctx)});

  bool upper_perfect;
  std::string shadow_detail;
  if (ctx.n == 2) {
    // No degree-3 layer exists, so the covering condition is vacuous.
    upper_perfect = true;
    shadow_detail = "degree-3 layer is empty";
  } else {
    ShadowSet gens(ctx.n, 2, ideal.generators());
    upper_perfect = is_upper_perfect(gens);
    std::ostringstream os;
    os << "upper shadow covers " << upper_shadow(gens).size() << " of " << binom(ctx.n, 3)
       << " degree-3 monomials";
    shadow_detail = os.str();
  }
  report.conditions.push_back({"G(I) is upper perfect", upper_perfect, shadow_detail});
  report.conditions.push_back(
      {"|G(I)| = (C(n,2) - b)/2", 2 * ctx.r == ctx.pairs - ctx.b, cardinality_detail(ctx)});
  {
    std::ostringstream os;
    os << "|b| = " << (ctx.b < 0 ? -ctx.b : ctx.b) << ", C(n,2) = " << ctx.pairs;
    report.conditions.push_back({"|b| < C(n,2)", (ctx.b < 0 ? -ctx.b : ctx.b) < ctx.pairs, os.str()});
  }

  report.verdict = std::all_of(report.conditions.begin(), report.conditions.end(),
                               [](const ConditionResult& c) { return c.holds; });
  return report;
}

std::pair<long long, long long> type_bounds(int n) {
  const long long pairs = binom(n, 2);
  return {-pairs + 2, pairs - 2 * perfect_number_formula(n)};
}

bool is_admissible_type(int n, long long b) {
  const auto [lo, hi] = type_bounds(n);
  if (b < lo || b > hi) return false;
  return ((binom(n, 2) - b) % 2) == 0;
}

PrimeIdeal::PrimeIdeal(Monomial vars) : vars_(vars) {
  if (vars.empty()) fail(Errc::OutOfRange, "a monomial prime needs at least one variable");
}

std::string PrimeIdeal::str() const {
  std::string out = "(";
  bool first = true;
  for (int v : vars_.vars()) {
    if (!first) out += ",";
    out += "x" + std::to_string(v);
    first = false;
  }
  out += ")";
  return out;
}

std::vector<PrimeIdeal> minimal_primes(const Ideal& ideal) {
  require_nonzero(ideal);
  auto covers = minimal_transversals(ideal.n(), ideal.generators());
  std::vector<PrimeIdeal> primes;
  primes.reserve(covers.size());
  for (const Monomial& t : covers) primes.emplace_back(t);
  std::sort(primes.begin(), primes.end());
  return primes;
}

bool minimal_prime_criterion(const Ideal& ideal, const PrimeIdeal& prime) {
  if (!height_characterization(ideal).verdict) {
    fail(Errc::NotQuasiDeg2, "criterion applies to degree-2 quasi ideals only");
  }
  const int n = ideal.n();
  if ((prime.vars().mask() & ~full_mask(n)) != 0) {
    fail(Errc::OutOfRange, "prime uses variables beyond x" + std::to_string(n));
  }
  const int h = prime.height();
  if (h != n - 2 && h != n - 1) {
    fail(Errc::WrongHeight, "criterion covers heights n-2 and n-1; prime has height " +
                                std::to_string(h));
  }

  const Monomial outside = prime.vars().complement(n);
  if (h == n - 2) {
    return !ideal.contains_generator(outside);
  }
  const int i = outside.vars().front();
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    if (!ideal.contains_generator(Monomial::single(i).with(j))) return false;
  }
  return true;
}

}  // namespace quasif
