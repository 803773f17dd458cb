#include "quasif/fvector.hpp"

#include <sstream>

#include "quasif/errors.hpp"

namespace quasif {

FVector::FVector(std::vector<long long> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) fail(Errc::OutOfRange, "f-vector must be nonempty");
  for (long long e : entries_) {
    if (e < 0) fail(Errc::OutOfRange, "f-vector entries are nonnegative");
  }
}

std::string FVector::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i];
  }
  os << ")";
  return os.str();
}

}  // namespace quasif
