#pragma once

#include <string>
#include <vector>

namespace quasif {

/// Face counts (f_0,...,f_d) of a d-dimensional complex.  The implicit
/// f_{-1} = 1 for the empty face is never stored.
class FVector {
 public:
  FVector() = default;
  explicit FVector(std::vector<long long> entries);

  int dim() const { return static_cast<int>(entries_.size()) - 1; }
  std::size_t size() const { return entries_.size(); }
  long long operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<long long>& entries() const { return entries_; }

  /// "(5, 8, 2)"
  std::string str() const;

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<long long> entries_;
};

}  // namespace quasif
