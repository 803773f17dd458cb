#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace quasif {

// Every failure mode of the library carries a stable symbolic name.  The CLI
// prints that name verbatim on the diagnostic stream and exits with code 1,
// so scripts can match on it.
enum class Errc {
  ParseError,
  OutOfRange,
  NotSquareFree,
  EmptyGenerator,
  DegreeOutOfRange,
  MixedDegree,
  DegreeOverflow,
  DegreeUnderflow,
  UnsupportedN,
  SearchTooLarge,
  ZeroIdeal,
  UncoveredVertices,
  NotEquigenerated,
  WrongHeight,
  NotQuasiDeg2,
  InvalidA,
  InvalidD,
  InadmissibleType,
  InternalVerificationFailure,
  NegativeDegree,
  TooLarge,
  FixtureMismatch,
  UsageError,
};

const char* errc_name(Errc code);

class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& detail);

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

/// Raised when a complex would leave vertices outside every facet; carries
/// the offending vertex list (1-based, ascending).
class UncoveredVerticesError : public DomainError {
 public:
  explicit UncoveredVerticesError(std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }

 private:
  std::vector<int> vertices_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw DomainError(code, detail);
}

}  // namespace quasif
