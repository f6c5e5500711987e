#pragma once

#include <map>
#include <string>
#include <vector>

#include "fflv/paths.hpp"
#include "fflv/roots.hpp"
#include "fflv/weyl.hpp"

namespace fflv {

/// sum_{alpha in support} s_alpha <= bound, with bound = lambda(h_base).
struct Inequality {
  RootPath support;
  PosRoot base;
  int bound = 0;

  auto operator<=>(const Inequality&) const = default;
};

/// One inequality per Dyck path for A; nonnegativity is implicit.
std::vector<Inequality> build_inequalities(const RootSubset& a, const DominantWeight& lambda,
                                           PathSplit split = PathSplit::Blocks);

/// Coordinates indexed by canonical root index over all of R^+; entries off the
/// domain are zero.
using Coords = std::vector<int>;

/// Integer point with support contained in `domain`.
struct LatticePoint {
  RootSubset domain;
  Coords values;

  int value(PosRoot a) const;
  auto operator<=>(const LatticePoint&) const = default;
};

/// Finite set of lattice points over a common domain, kept sorted and unique.
class PointSet {
 public:
  PointSet() = default;
  PointSet(RootSubset domain, std::vector<Coords> points);

  const RootSubset& domain() const { return domain_; }
  int rank() const { return domain_.rank(); }
  const std::vector<Coords>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const Coords& c) const;
  LatticePoint at(std::size_t k) const { return LatticePoint{domain_, points_[k]}; }

  bool operator==(const PointSet&) const = default;

 private:
  RootSubset domain_;
  std::vector<Coords> points_;
};

/// S_A(lambda): all integer points of P_A(lambda), lexicographic in canonical root order.
PointSet enumerate_lattice_points(const RootSubset& a, const DominantWeight& lambda,
                                  PathSplit split = PathSplit::Blocks);

/// Whether `point` (supported on its domain) satisfies every inequality of P_A(lambda).
bool in_polytope(const LatticePoint& point, const DominantWeight& lambda);

/// Zero-padding into R^+; throws Error(Contract) if the point is not in S_A(lambda).
LatticePoint embed_face(const LatticePoint& point, const DominantWeight& lambda);

/// Points of `full` (over R^+) vanishing off `a`, re-tagged with domain `a`.
PointSet restrict_to_face(const PointSet& full, const RootSubset& a);

/// {s + t}; throws Error(InvalidArgument) on mismatched domains.
PointSet minkowski_sum(const PointSet& s1, const PointSet& s2);

/// k-fold Minkowski sum of s with itself (k >= 1).
PointSet minkowski_power(const PointSet& s, int k);

/// Weight sum s_alpha alpha in simple-root coordinates, and PBW degree sum s_alpha.
struct WeightDegree {
  std::vector<int> weight;
  int degree = 0;
};
WeightDegree weight_and_degree(const LatticePoint& point);

/// degree -> number of points.
std::map<int, int> degree_histogram(const PointSet& s);

}  // namespace fflv
