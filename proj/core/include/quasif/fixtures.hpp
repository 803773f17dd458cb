#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasif/classify.hpp"
#include "quasif/ideal.hpp"

namespace quasif {

/// A worked example with frozen expected values.  "published" marks values
/// taken from the literature on these ideals; "recomputed" marks values this
/// project established by independent brute force.
struct ExampleFixture {
  std::string id;
  std::string source;
  Ideal ideal;
  FVector expected_facet_f;
  FVector expected_nonface_f;
  QuasiType expected_type;
  bool expected_f_ideal = false;
  std::optional<long long> expected_generator_count;
  std::optional<std::pair<long long, long long>> expected_bounds;
  // (m, dim (R/I)_m) samples checked against both Hilbert routes.
  std::vector<std::pair<long long, long long>> hilbert_samples;
};

struct FixtureOutcome {
  std::string id;
  std::string source;
  bool pass = false;
  std::string detail;
};

const std::vector<ExampleFixture>& worked_examples();

/// Recomputes every fixture and compares against the frozen values.
std::vector<FixtureOutcome> run_fixtures();

}  // namespace quasif
