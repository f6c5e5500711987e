#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fflv {

/// Largest rank supported by the bitmask-backed root sets (n(n+1)/2 <= 64).
inline constexpr int kMaxRank = 10;

/// Positive root alpha_{i,j} = alpha_i + ... + alpha_j of sl_{n+1}, 1 <= i <= j <= n.
/// The default ordering is lexicographic in (i, j), which is the canonical
/// coordinate order used everywhere downstream.
struct PosRoot {
  int i = 1;
  int j = 1;

  auto operator<=>(const PosRoot&) const = default;

  bool is_simple() const { return i == j; }
  int height() const { return j - i + 1; }

  /// "a{i}.{j}"
  std::string name() const;
};

/// Parses "a1.3" or "1.3"; throws Error(InvalidArgument) otherwise.
PosRoot parse_root(const std::string& text);

int num_positive_roots(int rank);

/// Position of `a` in canonical (lexicographic) order for the given rank.
int root_index(int rank, PosRoot a);
PosRoot root_at(int rank, int index);

bool is_valid_root(int rank, PosRoot a);

/// All n(n+1)/2 positive roots in canonical order.
std::vector<PosRoot> all_positive_roots(int rank);

/// True iff `a` dominates `b` in the Dyck-path order: a.i <= b.i and a.j <= b.j.
/// Note that this order is not the usual root order; alpha_1 is the maximum and
/// alpha_n the minimum.
bool leq_ffl(PosRoot a, PosRoot b);

/// Usual order: true iff b - a is a positive root or zero.
bool leq_usual(PosRoot a, PosRoot b);

/// True iff supp(a) u supp(b) is an interval.
bool supports_connected(PosRoot a, PosRoot b);

/// Minimal root that is >= both a and b in the usual order.
/// Throws Error(Domain) when the supports are not connected.
PosRoot gamma(PosRoot a, PosRoot b);

/// a + b - gamma(a, b) when that is a root (overlapping supports).
std::optional<PosRoot> complement_root(PosRoot a, PosRoot b);

/// Simple-root coordinates of `a`.
std::vector<int> simple_coefficients(int rank, PosRoot a);

/// Dominant integral weight sum m_i omega_i.
class DominantWeight {
 public:
  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> coeffs);

  /// Parses "1,1,1"; whitespace tolerated.
  static DominantWeight parse(const std::string& text);
  static DominantWeight zero(int rank);
  static DominantWeight fundamental(int rank, int k);
  static DominantWeight rho(int rank);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<int>& coeffs() const { return coeffs_; }
  int operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k - 1)); }

  bool is_regular() const;
  bool is_zero() const;

  DominantWeight operator+(const DominantWeight& other) const;
  DominantWeight scaled(int factor) const;
  bool operator==(const DominantWeight&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> coeffs_;
};

/// lambda(h_{alpha_{i,j}}) = m_i + ... + m_j.
int pairing(const DominantWeight& lambda, PosRoot a);

void check_rank(int rank);

}  // namespace fflv
