// Command-line frontend: every subcommand is a thin adapter over the library
// operations in quasif/.  Exit codes: 0 success, 1 domain error (the error
// name goes to stderr), 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quasif/classify.hpp"
#include "quasif/construct.hpp"
#include "quasif/errors.hpp"
#include "quasif/fixtures.hpp"
#include "quasif/hilbert.hpp"
#include "quasif/io.hpp"
#include "quasif/shadows.hpp"

using json = nlohmann::ordered_json;
using namespace quasif;

namespace {

struct CommonOpts {
  std::string input_path;
  std::string gens;
  int n = 0;
  bool has_n = false;
  std::string format = "text";
  std::string out_path;
};

void add_format_opts(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write the output to a file instead of stdout");
}

void add_input_opts(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--input", opts.input_path, "Ideal or complex file (JSON or one monomial per line)");
  cmd->add_option("--gens", opts.gens, "Inline generators, comma-separated compact monomials");
  cmd->add_option("--n", opts.n, "Number of variables")->each([&opts](const std::string&) {
    opts.has_n = true;
  });
  add_format_opts(cmd, opts);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::UsageError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

Ideal ideal_from_inline(const std::string& gens, int n) {
  std::vector<Monomial> ms;
  for (const std::string& tok : split(gens, ',')) ms.push_back(parse_monomial(tok, n));
  return minimalize(std::move(ms), n);
}

Ideal load_ideal(const CommonOpts& opts) {
  if (!opts.input_path.empty() && !opts.gens.empty()) {
    fail(Errc::UsageError, "give either --input or --gens, not both");
  }
  if (!opts.input_path.empty()) {
    const std::string text = read_file(opts.input_path);
    switch (detect_input_kind(text)) {
      case InputKind::IdealJson:
        return ideal_from_json_text(text);
      case InputKind::IdealText:
        return ideal_from_text(text, opts.has_n ? std::optional<int>(opts.n) : std::nullopt);
      case InputKind::ComplexJson:
        fail(Errc::UsageError, "'" + opts.input_path + "' holds a complex, not an ideal");
    }
  }
  if (!opts.gens.empty()) {
    if (!opts.has_n) fail(Errc::UsageError, "--gens requires --n");
    return ideal_from_inline(opts.gens, opts.n);
  }
  fail(Errc::UsageError, "an ideal is required: give --input or --gens with --n");
}

void emit(const CommonOpts& opts, const std::string& payload) {
  if (!opts.out_path.empty()) {
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) fail(Errc::UsageError, "cannot write '" + opts.out_path + "'");
    out << payload;
    return;
  }
  std::cout << payload;
}

std::string join_monomials(const std::vector<Monomial>& ms) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ", ";
    out += ms[i].str();
  }
  return out;
}

std::string join_sets(const std::vector<Monomial>& ms) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ", ";
    out += ms[i].set_str();
  }
  return out;
}

json index_sets(const std::vector<Monomial>& ms) {
  json arr = json::array();
  for (const auto& m : ms) arr.push_back(m.vars());
  return arr;
}

json report_to_json(const CharacterizationReport& report) {
  json doc;
  doc["n"] = report.n;
  doc["generator_count"] = report.generator_count;
  doc["b"] = report.b;
  if (report.height_value) doc["height"] = *report.height_value;
  json conds = json::array();
  for (const auto& c : report.conditions) {
    conds.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  }
  doc["conditions"] = conds;
  doc["verdict"] = report.verdict;
  return doc;
}

void print_report(std::ostream& os, const std::string& title,
                  const CharacterizationReport& report) {
  os << title << ":\n";
  for (const auto& c : report.conditions) {
    os << "  [" << (c.holds ? "pass" : "fail") << "] " << c.name << " (" << c.detail << ")\n";
  }
  os << "  verdict: " << (report.verdict ? "quasi of type (0, " + std::to_string(report.b) + ")"
                                         : "not a degree-2 quasi ideal")
     << "\n";
}

// ---------------------------------------------------------------- classify

int run_classify(const CommonOpts& opts, bool by_height, bool by_upper_perfect) {
  const Ideal ideal = load_ideal(opts);
  const auto result = quasi_type(ideal);
  const bool f_ideal = result.is_quasi() && result.type->is_zero();

  std::optional<CharacterizationReport> height_report, shadow_report;
  if (by_height) height_report = height_characterization(ideal);
  if (by_upper_perfect) shadow_report = upper_perfect_characterization(ideal);

  if (opts.format == "json") {
    json doc;
    doc["n"] = ideal.n();
    doc["generators"] = index_sets(ideal.generators());
    doc["facet_fvector"] = result.facet_f.entries();
    doc["nonface_fvector"] = result.nonface_f.entries();
    doc["quasi"] = result.is_quasi();
    if (result.is_quasi()) doc["type"] = result.type->entries();
    else doc["type"] = nullptr;
    doc["f_ideal"] = f_ideal;
    if (height_report) doc["height_characterization"] = report_to_json(*height_report);
    if (shadow_report) doc["upper_perfect_characterization"] = report_to_json(*shadow_report);
    emit(opts, doc.dump(2) + "\n");
    return 0;
  }

  std::ostringstream os;
  os << "n: " << ideal.n() << "\n";
  os << "generators (" << ideal.generator_count() << "): " << join_monomials(ideal.generators())
     << "\n";
  os << "f(facet complex): " << result.facet_f.str() << "\n";
  os << "f(non-face complex): " << result.nonface_f.str() << "\n";
  if (result.is_quasi()) {
    os << "type: " << result.type->str() << "\n";
  } else {
    os << "type: NotQuasi (facet complex dimension " << result.facet_f.dim()
       << ", non-face complex dimension " << result.nonface_f.dim() << ")\n";
  }
  os << "f-ideal: " << (f_ideal ? "yes" : "no") << "\n";
  if (height_report) print_report(os, "height characterization", *height_report);
  if (shadow_report) print_report(os, "upper-perfect characterization", *shadow_report);
  emit(opts, os.str());
  return 0;
}

// ---------------------------------------------------------------- fvector

int run_fvector(const CommonOpts& opts) {
  if (!opts.input_path.empty() && opts.gens.empty()) {
    const std::string text = read_file(opts.input_path);
    if (detect_input_kind(text) == InputKind::ComplexJson) {
      const auto complex = complex_from_json_text(text);
      const auto fv = f_vector(complex);
      if (opts.format == "json") {
        json doc;
        doc["n"] = complex.n();
        doc["fvector"] = fv.entries();
        emit(opts, doc.dump(2) + "\n");
      } else {
        emit(opts, fv.str() + "\n");
      }
      return 0;
    }
  }
  const Ideal ideal = load_ideal(opts);
  const auto facet_f = f_vector(facet_complex(ideal));
  const auto nonface_f = f_vector(stanley_reisner_complex(ideal));
  if (opts.format == "json") {
    json doc;
    doc["n"] = ideal.n();
    doc["facet_fvector"] = facet_f.entries();
    doc["nonface_fvector"] = nonface_f.entries();
    emit(opts, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "f(facet complex): " << facet_f.str() << "\n";
    os << "f(non-face complex): " << nonface_f.str() << "\n";
    emit(opts, os.str());
  }
  return 0;
}

// ---------------------------------------------------------------- complex

int run_complex(const CommonOpts& opts, bool facet_only, bool nonface_only) {
  if (!opts.input_path.empty()) {
    const std::string text = read_file(opts.input_path);
    if (detect_input_kind(text) == InputKind::ComplexJson) {
      // Complex input: emit the inverse ideals.
      const auto complex = complex_from_json_text(text);
      const Ideal facet = facet_ideal(complex);
      const Ideal nonface = nonface_ideal(complex);
      if (opts.format == "json") {
        json doc;
        doc["facet_ideal"] = json::parse(ideal_to_json_text(facet, -1));
        doc["nonface_ideal"] = json::parse(ideal_to_json_text(nonface, -1));
        emit(opts, doc.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << "facet ideal generators: " << join_monomials(facet.generators()) << "\n";
        os << "non-face ideal generators: "
           << (nonface.is_zero() ? "none (zero ideal)" : join_monomials(nonface.generators()))
           << "\n";
        emit(opts, os.str());
      }
      return 0;
    }
  }
  const Ideal ideal = load_ideal(opts);
  const bool both = facet_only == nonface_only;
  std::optional<SimplicialComplex> facet, nonface;
  if (both || facet_only) facet = facet_complex(ideal);
  if (both || nonface_only) nonface = stanley_reisner_complex(ideal);

  if (opts.format == "json") {
    if (both) {
      json doc;
      doc["facet_complex"] = json::parse(complex_to_json_text(*facet, -1));
      doc["nonface_complex"] = json::parse(complex_to_json_text(*nonface, -1));
      emit(opts, doc.dump(2) + "\n");
    } else {
      emit(opts, complex_to_json_text(facet ? *facet : *nonface, 2) + "\n");
    }
    return 0;
  }
  std::ostringstream os;
  if (facet) os << "facet complex facets: " << join_sets(facet->facets()) << "\n";
  if (nonface) os << "non-face complex facets: " << join_sets(nonface->facets()) << "\n";
  emit(opts, os.str());
  return 0;
}

// ---------------------------------------------------------------- primes

int run_primes(const CommonOpts& opts) {
  const Ideal ideal = load_ideal(opts);
  const auto primes = minimal_primes(ideal);
  if (opts.format == "json") {
    json doc;
    doc["n"] = ideal.n();
    json arr = json::array();
    for (const auto& p : primes) arr.push_back(p.vars().vars());
    doc["primes"] = arr;
    emit(opts, doc.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  for (const auto& p : primes) os << p.str() << "\n";
  emit(opts, os.str());
  return 0;
}

// ---------------------------------------------------------------- perfect

int run_perfect(const CommonOpts& opts, const std::string& check, bool number, int degree) {
  if (!opts.has_n) fail(Errc::UsageError, "perfect requires --n");
  if (check.empty() == !number) {
    fail(Errc::UsageError, "give exactly one of --check or --number");
  }

  if (!check.empty()) {
    std::vector<Monomial> members;
    for (const std::string& tok : split(check, ',')) members.push_back(parse_monomial(tok, opts.n));
    const int d = members.front().degree();
    const ShadowSet set(opts.n, d, members);
    const bool upper = is_upper_perfect(set);
    const bool lower = is_lower_perfect(set);
    if (opts.format == "json") {
      json doc;
      doc["n"] = opts.n;
      doc["degree"] = d;
      doc["members"] = index_sets(set.members());
      doc["upper_perfect"] = upper;
      doc["lower_perfect"] = lower;
      doc["perfect"] = upper && lower;
      emit(opts, doc.dump(2) + "\n");
      return 0;
    }
    std::ostringstream os;
    os << "set (" << set.size() << " members, degree " << d
       << "): " << join_monomials(set.members()) << "\n";
    os << "upper perfect: " << (upper ? "yes" : "no") << "\n";
    os << "lower perfect: " << (lower ? "yes" : "no") << "\n";
    os << "perfect: " << (upper && lower ? "yes" : "no") << "\n";
    emit(opts, os.str());
    return 0;
  }

  std::optional<long long> formula;
  if (degree == 2 && opts.n >= 4) formula = perfect_number_formula(opts.n);
  std::optional<long long> brute;
  std::string skip_reason;
  try {
    brute = perfect_number_bruteforce(opts.n, degree);
  } catch (const DomainError& e) {
    if (e.code() != Errc::SearchTooLarge) throw;
    skip_reason = e.what();
  }

  if (opts.format == "json") {
    json doc;
    doc["n"] = opts.n;
    doc["degree"] = degree;
    doc["formula"] = formula ? json(*formula) : json(nullptr);
    doc["bruteforce"] = brute ? json(*brute) : json(nullptr);
    emit(opts, doc.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  const std::string label = "N(" + std::to_string(opts.n) + "," + std::to_string(degree) + ")";
  if (formula) os << label << " formula: " << *formula << "\n";
  else if (degree == 2) os << label << " formula: unsupported (n < 4)\n";
  else os << label << " formula: none known\n";
  if (brute) os << label << " brute force: " << *brute << "\n";
  else os << label << " brute force: skipped (" << skip_reason << ")\n";
  emit(opts, os.str());
  return 0;
}

// ---------------------------------------------------------------- bounds

int run_bounds(const CommonOpts& opts) {
  if (!opts.has_n) fail(Errc::UsageError, "bounds requires --n");
  const auto [lo, hi] = type_bounds(opts.n);
  if (opts.format == "json") {
    json doc;
    doc["n"] = opts.n;
    doc["b_min"] = lo;
    doc["b_max"] = hi;
    emit(opts, doc.dump(2) + "\n");
  } else {
    emit(opts, std::to_string(lo) + " <= b <= " + std::to_string(hi) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------- construct

int run_construct(const CommonOpts& opts, long long b, bool has_b, const std::string& a_arg,
                  const std::string& d_arg) {
  if (!opts.has_n || !has_b) fail(Errc::UsageError, "construct requires --n and --b");
  std::optional<Monomial> a_set;
  if (!a_arg.empty()) {
    std::vector<int> indices;
    for (const std::string& tok : split(a_arg, ',')) {
      try {
        indices.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail(Errc::UsageError, "bad index '" + tok + "' in --A");
      }
    }
    a_set = Monomial::from_indices(indices, opts.n);
  }
  std::optional<std::vector<Monomial>> d_set;
  if (!d_arg.empty()) {
    std::vector<Monomial> ms;
    for (const std::string& tok : split(d_arg, ',')) ms.push_back(parse_monomial(tok, opts.n));
    d_set = std::move(ms);
  }
  const auto result = construct_of_type(opts.n, b, a_set, d_set);

  if (opts.format == "json") {
    json doc;
    doc["n"] = opts.n;
    doc["b"] = b;
    doc["A"] = result.a_set.vars();
    doc["W_A"] = index_sets(result.w_a);
    doc["D"] = index_sets(result.d_set);
    doc["generators"] = index_sets(result.ideal.generators());
    doc["type"] = result.claimed_type.entries();
    emit(opts, doc.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "n: " << opts.n << "\n";
  os << "b: " << b << "\n";
  os << "A: " << result.a_set.set_str() << "\n";
  os << "W_A (" << result.w_a.size() << "): " << join_monomials(result.w_a) << "\n";
  os << "D (" << result.d_set.size() << "): "
     << (result.d_set.empty() ? "empty" : join_monomials(result.d_set)) << "\n";
  os << "generators (" << result.ideal.generator_count()
     << "): " << join_monomials(result.ideal.generators()) << "\n";
  os << "type: " << result.claimed_type.str() << " [verified]\n";
  emit(opts, os.str());
  return 0;
}

// ---------------------------------------------------------------- enumerate

json census_json(int n, long long b, const EnumerationResult& result) {
  json doc;
  doc["n"] = n;
  doc["b"] = b;
  doc["count"] = result.count;
  doc["mod_symmetry"] = result.up_to_symmetry;
  doc["truncated"] = result.truncated;
  json arr = json::array();
  for (const auto& ideal : result.ideals) arr.push_back(index_sets(ideal.generators()));
  doc["ideals"] = arr;
  if (result.up_to_symmetry) doc["orbit_sizes"] = result.orbit_sizes;
  return doc;
}

int run_enumerate(const CommonOpts& opts, long long b, bool has_b, bool mod_symmetry,
                  std::size_t cap) {
  if (!opts.has_n || !has_b) fail(Errc::UsageError, "enumerate requires --n and --b");
  const auto result = enumerate_quasi(opts.n, b, mod_symmetry, cap);

  if (!opts.out_path.empty()) {
    // A census file is always JSON; stdout keeps the summary.
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) fail(Errc::UsageError, "cannot write '" + opts.out_path + "'");
    out << census_json(opts.n, b, result).dump(2) << "\n";
    std::cout << "count: " << result.count << "\n";
    return 0;
  }
  if (opts.format == "json") {
    emit(opts, census_json(opts.n, b, result).dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "n: " << opts.n << "\n";
  os << "b: " << b << "\n";
  os << "count: " << result.count << "\n";
  if (result.up_to_symmetry) os << "orbits: " << result.ideals.size() << "\n";
  for (std::size_t i = 0; i < result.ideals.size(); ++i) {
    os << join_monomials(result.ideals[i].generators());
    if (result.up_to_symmetry) os << " [orbit size " << result.orbit_sizes[i] << "]";
    os << "\n";
  }
  if (result.truncated) os << "(list truncated at " << result.ideals.size() << ")\n";
  emit(opts, os.str());
  return 0;
}

// ---------------------------------------------------------------- hilbert

int run_hilbert(const CommonOpts& opts, int function_order, bool has_function, bool series,
                bool closed_form) {
  const Ideal ideal = load_ideal(opts);
  const auto nonface_f = f_vector(stanley_reisner_complex(ideal));
  const bool everything = !has_function && !series && !closed_form;
  const int order = has_function ? function_order : 5;

  std::optional<CharacterizationReport> deg2;
  if (closed_form) {
    if (!is_equigenerated(ideal, 2)) {
      fail(Errc::NotQuasiDeg2, "closed forms exist for degree-2 quasi ideals only");
    }
    deg2 = height_characterization(ideal);
    if (!deg2->verdict) {
      fail(Errc::NotQuasiDeg2, "closed forms exist for degree-2 quasi ideals only");
    }
  }

  const auto fv_series = hilbert_series_from_fvector(nonface_f);

  if (opts.format == "json") {
    json doc;
    doc["n"] = ideal.n();
    doc["nonface_fvector"] = nonface_f.entries();
    if (everything || has_function) {
      json table = json::array();
      for (int m = 0; m <= order; ++m) {
        table.push_back({{"m", m}, {"value", hilbert_function_from_fvector(nonface_f, m)}});
      }
      doc["hilbert_function"] = table;
    }
    if (everything || series) {
      json s;
      s["terms"] = fv_series.terms;
      s["numerator"] = fv_series.numerator;
      s["denominator_exponent"] = fv_series.denom_exponent;
      s["denominator_scalar"] = fv_series.denom_scalar;
      doc["series"] = s;
    }
    if (closed_form) {
      const auto poly = hilbert_polynomial_deg2(deg2->n, deg2->b);
      const auto closed = hilbert_series_deg2(deg2->n, deg2->b);
      bool consistent = rational_equal(closed, fv_series);
      for (long long m = 1; m <= 6; ++m) {
        consistent = consistent && poly.evaluate(m) == hilbert_function_from_fvector(nonface_f, m);
      }
      json c;
      c["b"] = deg2->b;
      c["polynomial"] = {{"z_coeff", poly.z_coeff()}, {"const_coeff", poly.const_coeff()}};
      c["series"] = {{"numerator", closed.numerator},
                     {"denominator_exponent", closed.denom_exponent},
                     {"denominator_scalar", closed.denom_scalar}};
      c["consistent"] = consistent;
      doc["closed_form"] = c;
    }
    emit(opts, doc.dump(2) + "\n");
    return 0;
  }

  std::ostringstream os;
  os << "f(non-face complex): " << nonface_f.str() << "\n";
  if (everything || has_function) {
    for (int m = 0; m <= order; ++m) {
      os << "H(" << m << ") = " << hilbert_function_from_fvector(nonface_f, m) << "\n";
    }
  }
  if (everything || series) {
    os << "series: " << fv_series.term_sum_str() << "\n";
    os << "normalized: " << fv_series.normalized_str() << "\n";
  }
  if (closed_form) {
    const auto poly = hilbert_polynomial_deg2(deg2->n, deg2->b);
    const auto closed = hilbert_series_deg2(deg2->n, deg2->b);
    bool consistent = rational_equal(closed, fv_series);
    for (long long m = 1; m <= 6; ++m) {
      consistent = consistent && poly.evaluate(m) == hilbert_function_from_fvector(nonface_f, m);
    }
    os << "closed-form polynomial (m >= 1): " << poly.str() << "\n";
    os << "closed-form series: " << closed.normalized_str() << "\n";
    os << "consistency with the f-vector routes: " << (consistent ? "yes" : "NO") << "\n";
  }
  emit(opts, os.str());
  return 0;
}

// ---------------------------------------------------------------- fixtures

int run_fixtures_cmd(const CommonOpts& opts) {
  const auto outcomes = run_fixtures();
  std::size_t passed = 0;
  for (const auto& o : outcomes) passed += o.pass;

  if (opts.format == "json") {
    json doc;
    json arr = json::array();
    for (const auto& o : outcomes) {
      arr.push_back(
          {{"id", o.id}, {"source", o.source}, {"pass", o.pass}, {"detail", o.detail}});
    }
    doc["fixtures"] = arr;
    doc["passed"] = passed;
    doc["total"] = outcomes.size();
    emit(opts, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& o : outcomes) {
      os << (o.pass ? "PASS " : "FAIL ") << o.id << " (" << o.source << ")";
      if (!o.pass) os << ": " << o.detail;
      os << "\n";
    }
    os << passed << "/" << outcomes.size() << " fixtures passed\n";
    emit(opts, os.str());
  }
  if (passed != outcomes.size()) {
    std::cerr << errc_name(Errc::FixtureMismatch) << ": " << outcomes.size() - passed
              << " fixture(s) disagree\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-free monomial ideals: complexes, f-vectors, quasi types, perfect sets,\n"
               "minimal primes, degree-2 constructions and Hilbert series."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand");

  CommonOpts classify_opts;
  bool by_height = false, by_upper_perfect = false;
  auto* classify_cmd = app.add_subcommand("classify", "Quasi type, f-vectors and f-ideal flag");
  add_input_opts(classify_cmd, classify_opts);
  classify_cmd->add_flag("--by-height", by_height,
                         "Append the height/parity/cardinality characterization report");
  classify_cmd->add_flag("--by-upper-perfect", by_upper_perfect,
                         "Append the upper-perfect characterization report");

  CommonOpts fvector_opts;
  auto* fvector_cmd = app.add_subcommand("fvector", "f-vector(s) of an ideal or complex");
  add_input_opts(fvector_cmd, fvector_opts);

  CommonOpts complex_opts;
  bool facet_only = false, nonface_only = false;
  auto* complex_cmd =
      app.add_subcommand("complex", "Facet/non-face complex of an ideal, or ideals of a complex");
  add_input_opts(complex_cmd, complex_opts);
  complex_cmd->add_flag("--facet", facet_only, "Only the facet complex");
  complex_cmd->add_flag("--nonface", nonface_only, "Only the non-face complex");

  CommonOpts primes_opts;
  auto* primes_cmd = app.add_subcommand("primes", "Minimal primes, one per line");
  add_input_opts(primes_cmd, primes_opts);

  CommonOpts perfect_opts;
  std::string check_arg;
  bool number = false;
  int degree = 2;
  auto* perfect_cmd = app.add_subcommand("perfect", "Shadow/perfect-set checks and perfect numbers");
  perfect_cmd->add_option("--n", perfect_opts.n, "Number of variables")
      ->each([&perfect_opts](const std::string&) { perfect_opts.has_n = true; });
  perfect_cmd->add_option("--check", check_arg, "Comma-separated monomials to test");
  perfect_cmd->add_flag("--number", number, "Print the perfect number (formula and brute force)");
  perfect_cmd->add_option("--degree", degree, "Degree layer for --number")->capture_default_str();
  add_format_opts(perfect_cmd, perfect_opts);

  CommonOpts bounds_opts;
  auto* bounds_cmd = app.add_subcommand("bounds", "Admissible range of b for degree-2 quasi types");
  bounds_cmd->add_option("--n", bounds_opts.n, "Number of variables")
      ->each([&bounds_opts](const std::string&) { bounds_opts.has_n = true; });
  add_format_opts(bounds_cmd, bounds_opts);

  CommonOpts construct_opts;
  long long construct_b = 0;
  bool has_construct_b = false;
  std::string a_arg, d_arg;
  auto* construct_cmd = app.add_subcommand("construct", "Build a degree-2 quasi ideal of type (0,b)");
  construct_cmd->add_option("--n", construct_opts.n, "Number of variables")
      ->each([&construct_opts](const std::string&) { construct_opts.has_n = true; });
  construct_cmd->add_option("--b", construct_b, "Requested type entry b")
      ->each([&has_construct_b](const std::string&) { has_construct_b = true; });
  construct_cmd->add_option("--A", a_arg, "Partition block as comma-separated indices");
  construct_cmd->add_option("--D", d_arg, "Padding monomials, comma-separated");
  add_format_opts(construct_cmd, construct_opts);

  CommonOpts enumerate_opts;
  long long enum_b = 0;
  bool has_enum_b = false, mod_symmetry = false;
  std::size_t cap = 10000;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Census of degree-2 quasi ideals of type (0,b)");
  enumerate_cmd->add_option("--n", enumerate_opts.n, "Number of variables (4..7)")
      ->each([&enumerate_opts](const std::string&) { enumerate_opts.has_n = true; });
  enumerate_cmd->add_option("--b", enum_b, "Type entry b")
      ->each([&has_enum_b](const std::string&) { has_enum_b = true; });
  enumerate_cmd->add_flag("--mod-symmetry", mod_symmetry,
                          "One representative per vertex-relabeling orbit");
  enumerate_cmd->add_option("--cap", cap, "Cap on the listed ideals")->capture_default_str();
  add_format_opts(enumerate_cmd, enumerate_opts);

  CommonOpts hilbert_opts;
  int function_order = 5;
  bool has_function = false, want_series = false, want_closed = false;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function and series of R/I");
  add_input_opts(hilbert_cmd, hilbert_opts);
  hilbert_cmd->add_option("--function", function_order, "Print H(0..M)")
      ->each([&has_function](const std::string&) { has_function = true; });
  hilbert_cmd->add_flag("--series", want_series, "Print the series (term sum and normalized)");
  hilbert_cmd->add_flag("--closed-form", want_closed,
                        "Print the degree-2 closed forms with a consistency verdict");

  CommonOpts fixtures_opts;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Recompute the worked examples and compare");
  add_format_opts(fixtures_cmd, fixtures_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(classify_opts, by_height, by_upper_perfect);
    if (fvector_cmd->parsed()) return run_fvector(fvector_opts);
    if (complex_cmd->parsed()) return run_complex(complex_opts, facet_only, nonface_only);
    if (primes_cmd->parsed()) return run_primes(primes_opts);
    if (perfect_cmd->parsed()) return run_perfect(perfect_opts, check_arg, number, degree);
    if (bounds_cmd->parsed()) return run_bounds(bounds_opts);
    if (construct_cmd->parsed())
      return run_construct(construct_opts, construct_b, has_construct_b, a_arg, d_arg);
    if (enumerate_cmd->parsed())
      return run_enumerate(enumerate_opts, enum_b, has_enum_b, mod_symmetry, cap);
    if (hilbert_cmd->parsed())
      return run_hilbert(hilbert_opts, function_order, has_function, want_series, want_closed);
    if (fixtures_cmd->parsed()) return run_fixtures_cmd(fixtures_opts);
  } catch (const DomainError& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return e.code() == Errc::UsageError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
