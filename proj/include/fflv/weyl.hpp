#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fflv/roots.hpp"

namespace fflv {

/// Element of S_{n+1} in one-line notation w(1), ..., w(n+1).
///
/// Generator words are evaluated as left-to-right function composition: the
/// word "s2 s3 s1" denotes s2 o s3 o s1, so s1 acts first on {1, ..., n+1}.
/// With this convention s2 s3 s1 in S_4 is [3 1 4 2].
class Permutation {
 public:
  Permutation() = default;
  Permutation(int rank, std::vector<int> images);

  static Permutation identity(int rank);
  static Permutation simple(int rank, int i);
  static Permutation longest(int rank);
  static Permutation from_word(int rank, const std::vector<int>& word);

  /// "3 1 4 2" (commas or spaces); rank is inferred as length - 1.
  static Permutation parse_oneline(const std::string& text);
  /// "s2 s3 s1", "2 3 1", "" or "id".
  static Permutation parse_word(int rank, const std::string& text);

  int rank() const { return rank_; }
  /// w(k) for 1 <= k <= n+1.
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int length() const;
  bool is_identity() const;

  std::string oneline() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  int rank_ = 0;
  std::vector<int> images_;
};

/// u o v, i.e. (u o v)(k) = u(v(k)).
Permutation compose(const Permutation& u, const Permutation& v);

/// All (n+1)! permutations in lexicographic one-line order.
std::vector<Permutation> all_permutations(int rank);

/// Subset of the positive roots of a fixed rank, stored as a bitmask over
/// canonical root indices.
class RootSubset {
 public:
  RootSubset() = default;
  explicit RootSubset(int rank, std::uint64_t bits = 0);
  RootSubset(int rank, const std::vector<PosRoot>& members);

  static RootSubset full(int rank);
  /// "1.1,3.3,1.3", "a1.1 a3.3", "all" or "" (empty set).
  static RootSubset parse(int rank, const std::string& text);

  int rank() const { return rank_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(PosRoot a) const;
  void insert(PosRoot a);
  void erase(PosRoot a);
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool is_subset_of(const RootSubset& other) const { return (bits_ & ~other.bits_) == 0; }

  /// Members in canonical order.
  std::vector<PosRoot> members() const;
  std::string to_string() const;

  auto operator<=>(const RootSubset&) const = default;

 private:
  int rank_ = 0;
  std::uint64_t bits_ = 0;
};

/// {alpha_{i,j} : w(i) > w(j+1)} = w^{-1}(R^-) n R^+.
RootSubset inversion_roots(const Permutation& w);

/// For all i < k <= j < l with w(i) > w(j) and w(k) > w(l): w(i) > w(l) and w(k) >= w(j).
bool is_triangular_element(const Permutation& w);

/// For all alpha_{i1,j1}, alpha_{i2,j2} in A with i1 < i2, j1 < j2 and i2 <= j1 + 1:
/// alpha_{i1,j2} in A, and alpha_{i2,j1} in A whenever i2 <= j1.
bool is_triangular_subset(const RootSubset& a);

/// Segment data of the factorisation w = w_1 w_2 ... w_n with
/// w_i = s_{l_i} ... s_{i+1} s_i a right-end segment of u_i = s_n ... s_i.
/// ends[i-1] = l_i in [i-1, n]; l_i = i-1 encodes the empty segment.
struct KempfFactorization {
  std::vector<int> ends;

  int segment_length(int i) const { return ends[static_cast<std::size_t>(i - 1)] - i + 1; }
  bool segment_is_full(int i, int rank) const { return ends[static_cast<std::size_t>(i - 1)] == rank; }
};

KempfFactorization kempf_factorization(const Permutation& w);
Permutation from_kempf_factorization(int rank, const KempfFactorization& f);

/// l(w_i) <= l(w_{i+1}) + 1 whenever w_{i+1} is a proper segment of u_{i+1}.
bool is_kempf(const Permutation& w);

/// The staircase pattern S = u_i { alpha_{k, i+j} : 1 <= k <= i, 0 <= j < l_{i+1} - l_i }
/// with the boundary convention l_{n+1} := n. Every segment must be nonempty
/// (Error(Contract) otherwise). For such Kempf elements with n <= 3 this is the
/// complement of inversion_roots(w) in R^+; from n = 4 on it can miss roots,
/// e.g. [2 4 5 3 1] with ends (1,3,4,4).
RootSubset kempf_complement(int rank, const std::vector<int>& ends);

/// Lexicographically smallest reduced word (indices of simple reflections).
std::vector<int> reduced_word(const Permutation& w);

/// True iff s_i is a left descent: length(s_i w) < length(w).
bool is_left_descent(const Permutation& w, int i);

/// "s2 s3 s1"; "id" for the empty word.
std::string word_to_string(const std::vector<int>& word);

}  // namespace fflv
