#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fflv/characters.hpp"
#include "fflv/linalg.hpp"
#include "fflv/polytope.hpp"
#include "fflv/roots.hpp"
#include "fflv/weyl.hpp"

namespace fflv {

inline constexpr std::size_t kDefaultMaxDim = 400;

/// Tensor product of fundamental representations
///   (C^{n+1})^{(x) m_1} (x) (Lambda^2 C^{n+1})^{(x) m_2} (x) ... (x) (Lambda^n C^{n+1})^{(x) m_n}
/// with basis indexed by tuples of k-subsets of {1, ..., n+1}.
///
/// E_{ab} sends a subset containing b but not a to the subset with b replaced
/// by a, with sign (-1)^{#elements strictly between a and b}; on tensors it acts
/// by the Leibniz rule. Lowering operators are f_{alpha_{i,j}} = E_{j+1,i},
/// raising operators e_{alpha_{i,j}} = E_{i,j+1}.
class AmbientSpace {
 public:
  /// One tensor factor per entry; entry k means Lambda^k C^{n+1}.
  AmbientSpace(int rank, std::vector<int> factors);
  static std::shared_ptr<const AmbientSpace> for_weight(const DominantWeight& lambda);
  /// Ambient(lambda) (x) Ambient(mu), factors concatenated.
  static std::shared_ptr<const AmbientSpace> for_tensor(const DominantWeight& lambda, const DominantWeight& mu);

  int rank() const { return rank_; }
  std::size_t dim() const { return dim_; }
  const std::vector<int>& factors() const { return factors_; }

  /// Tensor of the highest vectors {1, ..., k} of every factor.
  IntVector highest_vector() const;
  /// GL weight (multiplicity of each index across all subsets) of a basis element.
  Exponent weight_of(std::size_t basis_index) const;

  IntVector apply_lowering(PosRoot a, const IntVector& v) const;
  IntVector apply_raising(PosRoot a, const IntVector& v) const;
  /// E_{row,col} on v.
  IntVector apply_elementary(int row, int col, const IntVector& v) const;

 private:
  int rank_;
  std::vector<int> factors_;
  std::vector<std::vector<std::uint32_t>> subsets_;  // per factor degree k: k-subsets as bitmasks
  std::vector<std::size_t> stride_;
  std::size_t dim_ = 1;

  std::uint32_t factor_state(std::size_t basis_index, std::size_t f) const;
};

/// Cyclic subspace of an ambient space, held as an echelon basis plus the
/// spanning vectors that produced it.
class ExplicitModule {
 public:
  ExplicitModule(std::shared_ptr<const AmbientSpace> ambient, DominantWeight lambda, IntVector generator);

  const AmbientSpace& ambient() const { return *ambient_; }
  std::shared_ptr<const AmbientSpace> ambient_ptr() const { return ambient_; }
  const DominantWeight& weight() const { return lambda_; }
  const IntVector& generator() const { return generator_; }
  std::size_t dim() const { return basis_.rank(); }
  const EchelonBasis& basis() const { return basis_; }
  const std::vector<IntVector>& spanning() const { return spanning_; }

  bool contains(const IntVector& v) const { return basis_.in_span(v); }

  using Operator = std::function<IntVector(const IntVector&)>;

  /// Closes the span of the generator under the given operator family;
  /// throws Error(SizeCap) once the dimension exceeds max_dim.
  void close_under(const std::vector<Operator>& ops, std::size_t max_dim);

 private:
  std::shared_ptr<const AmbientSpace> ambient_;
  DominantWeight lambda_;
  IntVector generator_;
  EchelonBasis basis_;
  std::vector<IntVector> spanning_;
};

/// V(lambda) = U(n^-).v_lambda, closed under the simple lowering operators.
ExplicitModule build_highest_weight_module(const DominantWeight& lambda, std::size_t max_dim = kDefaultMaxDim);

/// f_{i_1}^{a_1} ... f_{i_k}^{a_k} v_lambda along reduced_word(w), applying the
/// rightmost factor first with a_t the current weight's pairing with alpha_{i_t}.
/// Throws Error(Internal) if the result is zero or has the wrong weight.
IntVector extremal_vector(const ExplicitModule& module, const Permutation& w);

/// GL weight of v if it is a weight vector; nullopt otherwise (or for v = 0).
std::optional<Exponent> weight_of_vector(const AmbientSpace& ambient, const IntVector& v);

/// V_w(lambda) = U(b).v_{w(lambda)}: closure under every raising operator.
ExplicitModule demazure_submodule(const ExplicitModule& module, const Permutation& w,
                                  std::size_t max_dim = kDefaultMaxDim);

/// V_A(lambda) = U(n_A).v_lambda: closure under f_alpha, alpha in A.
ExplicitModule subset_submodule(const ExplicitModule& module, const RootSubset& a,
                                std::size_t max_dim = kDefaultMaxDim);

/// Ordered monomial f^s v = f_{b_1}^{s_1} ... f_{b_N}^{s_N} v with b_1 < ... < b_N
/// in canonical order; the rightmost factor acts first.
IntVector apply_monomial(const AmbientSpace& ambient, const Coords& s, const IntVector& v);

struct MonomialBasisReport {
  std::size_t lattice_points = 0;
  std::size_t rank = 0;          // rank of {f^s v_lambda : s in S_A(lambda)}
  std::size_t subset_dim = 0;    // dim V_A(lambda)
  bool independent = false;
  bool spanning = false;
  bool graded_independent = false;  // independent modulo the lower PBW filtration steps
  std::optional<Coords> witness;    // first point whose vector was dependent
};

MonomialBasisReport verify_monomial_basis(const ExplicitModule& module, const RootSubset& a,
                                          std::size_t max_dim = kDefaultMaxDim);

/// dim M_0, dim M_1, ... for M_s = span of <= s lowering operators from A applied to v_lambda,
/// up to the first s with M_s = M_{s+1}.
std::vector<std::size_t> pbw_filtration_profile(const ExplicitModule& module, const RootSubset& a,
                                                std::size_t max_dim = kDefaultMaxDim);

/// Monomial order used for essential monomials. Variables are ordered by
///   alpha_{1,n} > alpha_{1,n-1} > alpha_{2,n} > alpha_{1,n-2} > ... > alpha_1 > ... > alpha_n
/// (height descending, then row ascending); monomials compare by degree first.
enum class MonomialOrder { HomogeneousRevLex, HomogeneousLex };

/// Variable order on A described above, largest first.
std::vector<PosRoot> essential_variable_order(const RootSubset& a);

/// Exponents s with f^s v not in span{f^t v : t < s}.
PointSet essential_monomials(const ExplicitModule& module, const RootSubset& a,
                             MonomialOrder order = MonomialOrder::HomogeneousRevLex,
                             std::size_t max_dim = kDefaultMaxDim);

/// dim U(n_A).(v_lambda (x) v_mu) inside V(lambda) (x) V(mu) (diagonal action).
std::size_t cartan_component_dimension(const DominantWeight& lambda, const DominantWeight& mu, const RootSubset& a,
                                       std::size_t max_dim = kDefaultMaxDim);

}  // namespace fflv
