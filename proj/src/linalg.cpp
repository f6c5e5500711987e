#include "fflv/linalg.hpp"

#include <numeric>

#include "fflv/error.hpp"

namespace fflv {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Internal, "integer overflow in elimination");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Internal, "integer overflow in elimination");
  return r;
}

}  // namespace

bool is_zero(const IntVector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

void make_primitive(IntVector& v) {
  std::int64_t g = 0;
  std::int64_t lead = 0;
  for (auto x : v) {
    if (x == 0) continue;
    if (lead == 0) lead = x;
    g = std::gcd(g, x < 0 ? -x : x);
  }
  if (g == 0) return;
  if (lead < 0) g = -g;
  for (auto& x : v) x /= g;
}

IntVector EchelonBasis::reduce(IntVector v) const {
  if (v.size() != dim_) fail(ErrorCode::InvalidArgument, "vector length does not match basis dimension");
  for (std::size_t c = 0; c < dim_; ++c) {
    if (v[c] == 0 || pivot_row_[c] < 0) continue;
    const IntVector& r = rows_[static_cast<std::size_t>(pivot_row_[c])];
    const std::int64_t p = r[c];
    const std::int64_t x = v[c];
    std::int64_t g = std::gcd(p, x < 0 ? -x : x);
    const std::int64_t sv = p / g;
    const std::int64_t sr = x / g;
    for (std::size_t k = 0; k < dim_; ++k) v[k] = checked_sub(checked_mul(sv, v[k]), checked_mul(sr, r[k]));
    make_primitive(v);
  }
  return v;
}

bool EchelonBasis::in_span(const IntVector& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(const IntVector& v) {
  IntVector r = reduce(v);
  std::size_t c = 0;
  while (c < dim_ && r[c] == 0) ++c;
  if (c == dim_) return false;
  make_primitive(r);
  pivot_row_[c] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

}  // namespace fflv
