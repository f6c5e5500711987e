#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fflv/polytope.hpp"

namespace fflv {

/// Marked poset (A u M, M, lambda).
///
/// The order on R^+ is the Dyck-path order (alpha_1 on top, alpha_n at the
/// bottom), extended by the chain of markers a_1 > a_2 > ... > a_{n+1} with
/// a_1 > alpha_1, alpha_{k-1} > a_k > alpha_k (2 <= k <= n) and
/// alpha_n > a_{n+1}. Consequently a_k > alpha_{i,j} iff k <= i, and
/// alpha_{i,j} > a_k iff j < k. The order on A u M is the restriction, and
/// covers are the transitive reduction of that restriction.
///
/// Markings: a_k -> m_k + ... + m_n, a_{n+1} -> 0.
class MarkedPoset {
 public:
  MarkedPoset(const RootSubset& a, const DominantWeight& lambda);

  int rank() const { return a_.rank(); }
  const RootSubset& subset() const { return a_; }
  const DominantWeight& weight() const { return lambda_; }

  /// Elements 0..|A|-1 are the roots of A in canonical order; |A| + k - 1 is marker a_k.
  int num_elements() const { return static_cast<int>(roots_.size()) + rank() + 1; }
  int num_unmarked() const { return static_cast<int>(roots_.size()); }
  bool is_marked(int e) const { return e >= num_unmarked(); }
  int marker(int k) const { return num_unmarked() + k - 1; }
  PosRoot root(int e) const { return roots_.at(static_cast<std::size_t>(e)); }
  /// Marking of marker element e.
  int marking(int e) const;
  std::string label(int e) const;

  /// Strict order x > y.
  bool greater(int x, int y) const;
  /// Cover pairs (upper, lower), sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  /// Saturated chains m1 > p_1 > ... > p_s > m2 (s >= 1, p_k unmarked) as
  /// (unmarked elements, bound = marking(m1) - marking(m2)).
  struct ChainInequality {
    std::vector<int> elements;
    int bound = 0;
    auto operator<=>(const ChainInequality&) const = default;
  };
  std::vector<ChainInequality> chain_inequalities() const;

  /// JSON with "nodes" (id, label, marked, marking) and "edges" (cover pairs).
  std::string to_json() const;

 private:
  RootSubset a_;
  DominantWeight lambda_;
  std::vector<PosRoot> roots_;
  std::vector<int> markings_;
  std::vector<std::pair<int, int>> covers_;
};

/// Strict order on R^+ u M used by MarkedPoset, exposed for testing.
bool marked_order_greater(int rank, bool x_marked, int x_marker, PosRoot x_root, bool y_marked, int y_marker,
                          PosRoot y_root);

MarkedPoset build_marked_poset(const RootSubset& a, const DominantWeight& lambda);

/// Lattice points of the marked chain polytope, as points over domain A.
PointSet marked_chain_points(const MarkedPoset& p);

/// Lattice points of the marked order polytope, as points over domain A.
PointSet marked_order_points(const MarkedPoset& p);

enum class MarkedPolytope { Chain, Order };

/// Lattice-point count of the chosen polytope for markings of t * lambda (t >= 1).
std::size_t ehrhart_count(const RootSubset& a, const DominantWeight& lambda, int t, MarkedPolytope which);

}  // namespace fflv
