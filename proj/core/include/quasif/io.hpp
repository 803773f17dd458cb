#pragma once

#include <optional>
#include <string>

#include "quasif/ideal.hpp"
#include "quasif/simplicial_complex.hpp"

namespace quasif {

/// {"n": 5, "generators": [[1,2,4],[1,2,5],...]}; unknown keys are ignored,
/// generators are normalized through minimalize.
Ideal ideal_from_json_text(const std::string& text);
std::string ideal_to_json_text(const Ideal& ideal, int indent = 2);

/// {"n": 5, "facets": [[1,2],[3,4],...]}
SimplicialComplex complex_from_json_text(const std::string& text);
std::string complex_to_json_text(const SimplicialComplex& complex, int indent = 2);

/// One monomial per line (any accepted monomial form); blank lines and lines
/// starting with '#' are skipped.  n is taken from the argument when given,
/// otherwise inferred as the largest index used.
Ideal ideal_from_text(const std::string& text, std::optional<int> n = std::nullopt);

enum class InputKind { IdealJson, ComplexJson, IdealText };

/// JSON documents are told apart by their "generators"/"facets" key;
/// anything that does not parse as JSON is treated as the line format.
InputKind detect_input_kind(const std::string& text);

}  // namespace quasif
