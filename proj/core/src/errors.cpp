#include "quasif/errors.hpp"

#include <sstream>

namespace quasif {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::EmptyGenerator: return "EmptyGenerator";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::MixedDegree: return "MixedDegree";
    case Errc::DegreeOverflow: return "DegreeOverflow";
    case Errc::DegreeUnderflow: return "DegreeUnderflow";
    case Errc::UnsupportedN: return "UnsupportedN";
    case Errc::SearchTooLarge: return "SearchTooLarge";
    case Errc::ZeroIdeal: return "ZeroIdeal";
    case Errc::UncoveredVertices: return "UncoveredVertices";
    case Errc::NotEquigenerated: return "NotEquigenerated";
    case Errc::WrongHeight: return "WrongHeight";
    case Errc::NotQuasiDeg2: return "NotQuasiDeg2";
    case Errc::InvalidA: return "InvalidA";
    case Errc::InvalidD: return "InvalidD";
    case Errc::InadmissibleType: return "InadmissibleType";
    case Errc::InternalVerificationFailure: return "InternalVerificationFailure";
    case Errc::NegativeDegree: return "NegativeDegree";
    case Errc::TooLarge: return "TooLarge";
    case Errc::FixtureMismatch: return "FixtureMismatch";
    case Errc::UsageError: return "UsageError";
  }
  return "UnknownError";
}

DomainError::DomainError(Errc code, const std::string& detail)
    : std::runtime_error(detail), code_(code) {}

namespace {

std::string format_vertex_list(const std::vector<int>& vertices) {
  std::ostringstream os;
  os << "vertices covered by no facet:";
  for (int v : vertices) os << " " << v;
  return os.str();
}

}  // namespace

UncoveredVerticesError::UncoveredVerticesError(std::vector<int> vertices)
    : DomainError(Errc::UncoveredVertices, format_vertex_list(vertices)),
      vertices_(std::move(vertices)) {}

}  // namespace quasif
