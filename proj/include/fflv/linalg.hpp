#pragma once

#include <cstdint>
#include <vector>

namespace fflv {

using IntVector = std::vector<std::int64_t>;

/// Incremental row-echelon basis over the integers (fraction-free elimination).
/// Rows are kept primitive (content 1) with a positive pivot; every
/// arithmetic step is overflow-checked and throws Error(Internal) on overflow.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim = 0) : dim_(dim), pivot_row_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the basis; the result is zero iff v lies in the span.
  IntVector reduce(IntVector v) const;
  bool in_span(const IntVector& v) const;
  /// Adds v if it is independent of the current rows; returns whether it was.
  bool insert(const IntVector& v);

 private:
  std::size_t dim_;
  std::vector<IntVector> rows_;
  std::vector<int> pivot_row_;
};

bool is_zero(const IntVector& v);
/// Divides out the gcd of the entries and makes the leading entry positive.
void make_primitive(IntVector& v);

}  // namespace fflv
