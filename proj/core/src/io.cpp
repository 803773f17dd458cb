#include "quasif/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "quasif/errors.hpp"

namespace quasif {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Errc::ParseError, "input is not valid JSON");
  return doc;
}

int read_n(const json& doc) {
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    fail(Errc::ParseError, "missing integer field \"n\"");
  }
  return doc["n"].get<int>();
}

std::vector<Monomial> read_index_sets(const json& doc, const char* key, int n) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    fail(Errc::ParseError, std::string("missing array field \"") + key + "\"");
  }
  std::vector<Monomial> out;
  for (const json& entry : doc[key]) {
    if (!entry.is_array()) fail(Errc::ParseError, std::string(key) + " entries must be index arrays");
    std::vector<int> indices;
    for (const json& idx : entry) {
      if (!idx.is_number_integer()) fail(Errc::ParseError, "indices must be integers");
      indices.push_back(idx.get<int>());
    }
    out.push_back(Monomial::from_indices(indices, n));
  }
  return out;
}

json index_sets_to_json(const std::vector<Monomial>& sets) {
  json arr = json::array();
  for (const Monomial& m : sets) arr.push_back(m.vars());
  return arr;
}

}  // namespace

Ideal ideal_from_json_text(const std::string& text) {
  const json doc = parse_json(text);
  const int n = read_n(doc);
  return minimalize(read_index_sets(doc, "generators", n), n);
}

std::string ideal_to_json_text(const Ideal& ideal, int indent) {
  json doc;
  doc["n"] = ideal.n();
  doc["generators"] = index_sets_to_json(ideal.generators());
  return doc.dump(indent);
}

SimplicialComplex complex_from_json_text(const std::string& text) {
  const json doc = parse_json(text);
  const int n = read_n(doc);
  return SimplicialComplex(n, read_index_sets(doc, "facets", n));
}

std::string complex_to_json_text(const SimplicialComplex& complex, int indent) {
  json doc;
  doc["n"] = complex.n();
  doc["facets"] = index_sets_to_json(complex.facets());
  return doc.dump(indent);
}

Ideal ideal_from_text(const std::string& text, std::optional<int> n) {
  std::vector<std::string> lines;
  {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);
      if (line.empty() || line[0] == '#') continue;
      lines.push_back(line);
    }
  }
  std::vector<Monomial> gens;
  gens.reserve(lines.size());
  int max_index = 0;
  for (const std::string& line : lines) {
    Monomial m = parse_monomial(line, Monomial::kMaxVars);
    if (!m.empty()) max_index = std::max(max_index, m.vars().back());
    gens.push_back(m);
  }
  int vars = n.value_or(max_index);
  if (n && *n < max_index) {
    fail(Errc::OutOfRange, "monomials use x" + std::to_string(max_index) +
                               " but n = " + std::to_string(*n));
  }
  if (vars == 0) fail(Errc::ParseError, "no monomials in input and no n given");
  return minimalize(std::move(gens), vars);
}

InputKind detect_input_kind(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) return InputKind::IdealText;
  if (doc.is_object() && doc.contains("facets")) return InputKind::ComplexJson;
  return InputKind::IdealJson;
}

}  // namespace quasif
