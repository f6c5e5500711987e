#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fflv/polytope.hpp"
#include "fflv/roots.hpp"
#include "fflv/weyl.hpp"

namespace fflv {

/// Exponent vector in Z^{n+1}: x_1^{a_1} ... x_{n+1}^{a_{n+1}}.
using Exponent = std::vector<int>;

/// Finite Laurent polynomial in the torus variables x_1, ..., x_{n+1}.
/// sl-weights are encoded GL-style: lambda -> its partition, alpha_{i,j} -> e_i - e_{j+1},
/// and a permutation w acts by e_k -> e_{w(k)}.
class Character {
 public:
  Character() = default;
  explicit Character(int rank) : rank_(rank) {}

  static Character monomial(int rank, const Exponent& e, std::int64_t coeff = 1);

  int rank() const { return rank_; }
  const std::map<Exponent, std::int64_t>& terms() const { return terms_; }

  void add(const Exponent& e, std::int64_t coeff);
  /// Sum of coefficients (the dimension, for an honest character).
  std::int64_t mass() const;
  bool all_positive() const;

  /// "x1^2*x2 + 2*x1*x2*x3 + ..." in descending exponent order.
  std::string to_text() const;
  /// {"[2,1,0]": 1, ...}
  std::string to_json() const;

  bool operator==(const Character&) const = default;

 private:
  int rank_ = 0;
  std::map<Exponent, std::int64_t> terms_;
};

/// lambda_k = m_k + ... + m_n, lambda_{n+1} = 0.
Exponent to_partition(const DominantWeight& lambda);

/// Isobaric divided difference (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}),
/// computed by exact polynomial division along (i, i+1)-strings.
/// Throws Error(Internal) on a nonzero remainder.
Character demazure_operator(int i, const Character& f);

/// D_{i_1} ... D_{i_k} x^lambda along a reduced word (i_1, ..., i_k) of w,
/// applying D_{i_k} first. Defaults to reduced_word(w).
Character demazure_character_oracle(const Permutation& w, const DominantWeight& lambda);
Character demazure_character_along(const std::vector<int>& word, const DominantWeight& lambda);

/// sum_{s in S_A(lambda)} x^{w(lambda - wt s)} with A = inversion_roots(w).
/// Throws Error(Contract) if `a` differs from inversion_roots(w) or w is not triangular.
Character character_from_lattice_points(const RootSubset& a, const DominantWeight& lambda, const Permutation& w);

/// Same sum without the triangularity guard (used to quantify the deficit for
/// non-triangular w).
Character lattice_character_unchecked(const PointSet& points, const DominantWeight& lambda, const Permutation& w);

/// Weyl dimension formula prod (lambda(h_alpha) + ht(alpha)) / ht(alpha).
std::uint64_t weyl_dimension(const DominantWeight& lambda);

/// e_k -> e_{w(k)} on exponent vectors.
Exponent act(const Permutation& w, const Exponent& e);

}  // namespace fflv
