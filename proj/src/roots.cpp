#include "fflv/roots.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "fflv/error.hpp"
#include "text_util.hpp"

namespace fflv {

std::string PosRoot::name() const { return "a" + std::to_string(i) + "." + std::to_string(j); }

PosRoot parse_root(const std::string& text) {
  std::string t = detail::trim(text);
  if (!t.empty() && (t[0] == 'a' || t[0] == 'A')) t.erase(0, 1);
  auto dot = t.find('.');
  if (dot == std::string::npos) fail(ErrorCode::InvalidArgument, "malformed root '" + text + "'");
  auto i = detail::parse_int(t.substr(0, dot));
  auto j = detail::parse_int(t.substr(dot + 1));
  if (!i || !j) fail(ErrorCode::InvalidArgument, "malformed root '" + text + "'");
  if (*i < 1 || *i > *j) fail(ErrorCode::InvalidArgument, "root '" + text + "' needs 1 <= i <= j");
  return PosRoot{*i, *j};
}

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank)
    fail(ErrorCode::InvalidRank, "rank must lie in [1, " + std::to_string(kMaxRank) +
                                     "], got " + std::to_string(rank));
}

int num_positive_roots(int rank) { return rank * (rank + 1) / 2; }

bool is_valid_root(int rank, PosRoot a) { return 1 <= a.i && a.i <= a.j && a.j <= rank; }

int root_index(int rank, PosRoot a) {
  // rows 1..i-1 contribute n, n-1, ..., n-i+2 roots
  int before = (a.i - 1) * rank - (a.i - 1) * (a.i - 2) / 2;
  return before + (a.j - a.i);
}

PosRoot root_at(int rank, int index) {
  int i = 1;
  while (index >= rank - i + 1) {
    index -= rank - i + 1;
    ++i;
  }
  return PosRoot{i, i + index};
}

std::vector<PosRoot> all_positive_roots(int rank) {
  check_rank(rank);
  std::vector<PosRoot> out;
  out.reserve(static_cast<std::size_t>(num_positive_roots(rank)));
  for (int i = 1; i <= rank; ++i)
    for (int j = i; j <= rank; ++j) out.push_back(PosRoot{i, j});
  return out;
}

bool leq_ffl(PosRoot a, PosRoot b) { return a.i <= b.i && a.j <= b.j; }

bool leq_usual(PosRoot a, PosRoot b) {
  if (!(b.i <= a.i && a.j <= b.j)) return false;
  // b - a = alpha_{b.i, a.i-1} + alpha_{a.j+1, b.j}; a root only if one side is empty
  return b.i == a.i || a.j == b.j;
}

bool supports_connected(PosRoot a, PosRoot b) {
  return std::min(a.j, b.j) + 1 >= std::max(a.i, b.i);
}

PosRoot gamma(PosRoot a, PosRoot b) {
  if (!supports_connected(a, b))
    fail(ErrorCode::Domain, "gamma(" + a.name() + ", " + b.name() + "): supports not connected");
  return PosRoot{std::min(a.i, b.i), std::max(a.j, b.j)};
}

std::optional<PosRoot> complement_root(PosRoot a, PosRoot b) {
  int lo = std::max(a.i, b.i);
  int hi = std::min(a.j, b.j);
  if (lo > hi) return std::nullopt;
  return PosRoot{lo, hi};
}

std::vector<int> simple_coefficients(int rank, PosRoot a) {
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  for (int k = a.i; k <= a.j; ++k) c[static_cast<std::size_t>(k - 1)] = 1;
  return c;
}

DominantWeight::DominantWeight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  check_rank(rank());
  for (int m : coeffs_)
    if (m < 0) fail(ErrorCode::InvalidArgument, "dominant weight coefficients must be >= 0");
}

DominantWeight DominantWeight::parse(const std::string& text) {
  std::vector<int> coeffs;
  for (const auto& tok : detail::split(text, ',')) {
    auto v = detail::parse_int(tok);
    if (!v) fail(ErrorCode::InvalidArgument, "malformed weight '" + text + "'");
    coeffs.push_back(*v);
  }
  if (coeffs.empty()) fail(ErrorCode::InvalidArgument, "empty weight");
  return DominantWeight(std::move(coeffs));
}

DominantWeight DominantWeight::zero(int rank) {
  return DominantWeight(std::vector<int>(static_cast<std::size_t>(rank), 0));
}

DominantWeight DominantWeight::fundamental(int rank, int k) {
  if (k < 1 || k > rank) fail(ErrorCode::InvalidArgument, "fundamental weight index out of range");
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  c[static_cast<std::size_t>(k - 1)] = 1;
  return DominantWeight(std::move(c));
}

DominantWeight DominantWeight::rho(int rank) {
  return DominantWeight(std::vector<int>(static_cast<std::size_t>(rank), 1));
}

bool DominantWeight::is_regular() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int m) { return m > 0; });
}

bool DominantWeight::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int m) { return m == 0; });
}

DominantWeight DominantWeight::operator+(const DominantWeight& other) const {
  if (other.rank() != rank()) fail(ErrorCode::InvalidRank, "weight rank mismatch");
  std::vector<int> c = coeffs_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += other.coeffs_[k];
  return DominantWeight(std::move(c));
}

DominantWeight DominantWeight::scaled(int factor) const {
  if (factor < 0) fail(ErrorCode::InvalidArgument, "negative dilation");
  std::vector<int> c = coeffs_;
  for (int& m : c) m *= factor;
  return DominantWeight(std::move(c));
}

std::string DominantWeight::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) os << (k ? "," : "") << coeffs_[k];
  return os.str();
}

int pairing(const DominantWeight& lambda, PosRoot a) {
  if (!is_valid_root(lambda.rank(), a))
    fail(ErrorCode::InvalidRank, "root " + a.name() + " outside rank " + std::to_string(lambda.rank()));
  int s = 0;
  for (int k = a.i; k <= a.j; ++k) s += lambda[k];
  return s;
}

}  // namespace fflv
