#include "fflv/polytope.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "fflv/error.hpp"

namespace fflv {

std::vector<Inequality> build_inequalities(const RootSubset& a, const DominantWeight& lambda, PathSplit split) {
  if (a.rank() != lambda.rank()) fail(ErrorCode::InvalidRank, "subset and weight ranks differ");
  std::vector<Inequality> out;
  for (const auto& p : enumerate_dyck_paths_for(a, split))
    out.push_back(Inequality{p.roots, p.base, pairing(lambda, p.base)});
  return out;
}

int LatticePoint::value(PosRoot a) const {
  if (!is_valid_root(domain.rank(), a)) return 0;
  return values[static_cast<std::size_t>(root_index(domain.rank(), a))];
}

PointSet::PointSet(RootSubset domain, std::vector<Coords> points) : domain_(domain), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const Coords& c) const { return std::binary_search(points_.begin(), points_.end(), c); }

namespace {

struct Search {
  std::vector<int> coords;                   // canonical indices of A, ascending
  std::vector<std::vector<int>> touching;    // per coordinate: inequalities containing it
  std::vector<int> slack;                    // per inequality: remaining room
  Coords current;
  std::vector<Coords> found;

  void run(std::size_t pos) {
    if (pos == coords.size()) {
      found.push_back(current);
      return;
    }
    int cap = std::numeric_limits<int>::max();
    for (int q : touching[pos]) cap = std::min(cap, slack[static_cast<std::size_t>(q)]);
    const auto c = static_cast<std::size_t>(coords[pos]);
    for (int v = 0; v <= cap; ++v) {
      current[c] = v;
      for (int q : touching[pos]) slack[static_cast<std::size_t>(q)] -= v;
      run(pos + 1);
      for (int q : touching[pos]) slack[static_cast<std::size_t>(q)] += v;
    }
    current[c] = 0;
  }
};

}  // namespace

PointSet enumerate_lattice_points(const RootSubset& a, const DominantWeight& lambda, PathSplit split) {
  const int rank = a.rank();
  const auto ineqs = build_inequalities(a, lambda, split);
  Search s;
  for (auto r : a.members()) s.coords.push_back(root_index(rank, r));
  s.touching.resize(s.coords.size());
  for (std::size_t q = 0; q < ineqs.size(); ++q) {
    s.slack.push_back(ineqs[q].bound);
    for (auto r : ineqs[q].support) {
      auto pos = std::lower_bound(s.coords.begin(), s.coords.end(), root_index(rank, r)) - s.coords.begin();
      s.touching[static_cast<std::size_t>(pos)].push_back(static_cast<int>(q));
    }
  }
  for (std::size_t pos = 0; pos < s.coords.size(); ++pos)
    if (s.touching[pos].empty())
      fail(ErrorCode::Domain, "P_A(lambda) is unbounded in coordinate " + root_at(rank, s.coords[pos]).name());
  s.current.assign(static_cast<std::size_t>(num_positive_roots(rank)), 0);
  s.run(0);
  return PointSet(a, std::move(s.found));
}

bool in_polytope(const LatticePoint& point, const DominantWeight& lambda) {
  const int rank = point.domain.rank();
  for (int idx = 0; idx < num_positive_roots(rank); ++idx) {
    int v = point.values[static_cast<std::size_t>(idx)];
    if (v < 0) return false;
    if (v != 0 && !point.domain.contains(root_at(rank, idx))) return false;
  }
  for (const auto& ineq : build_inequalities(point.domain, lambda)) {
    int sum = 0;
    for (auto r : ineq.support) sum += point.value(r);
    if (sum > ineq.bound) return false;
  }
  return true;
}

LatticePoint embed_face(const LatticePoint& point, const DominantWeight& lambda) {
  if (!in_polytope(point, lambda)) fail(ErrorCode::Contract, "embed_face: point is not in S_A(lambda)");
  return LatticePoint{RootSubset::full(point.domain.rank()), point.values};
}

PointSet restrict_to_face(const PointSet& full, const RootSubset& a) {
  std::vector<Coords> kept;
  const int rank = a.rank();
  for (const auto& p : full.points()) {
    bool ok = true;
    for (int idx = 0; idx < num_positive_roots(rank) && ok; ++idx)
      if (p[static_cast<std::size_t>(idx)] != 0 && !a.contains(root_at(rank, idx))) ok = false;
    if (ok) kept.push_back(p);
  }
  return PointSet(a, std::move(kept));
}

PointSet minkowski_sum(const PointSet& s1, const PointSet& s2) {
  if (s1.domain() != s2.domain()) fail(ErrorCode::InvalidArgument, "minkowski_sum: domains differ");
  std::set<Coords> acc;
  for (const auto& p : s1.points())
    for (const auto& q : s2.points()) {
      Coords r = p;
      for (std::size_t k = 0; k < r.size(); ++k) r[k] += q[k];
      acc.insert(std::move(r));
    }
  return PointSet(s1.domain(), std::vector<Coords>(acc.begin(), acc.end()));
}

PointSet minkowski_power(const PointSet& s, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "minkowski_power: k must be >= 1");
  PointSet acc = s;
  for (int t = 1; t < k; ++t) acc = minkowski_sum(acc, s);
  return acc;
}

WeightDegree weight_and_degree(const LatticePoint& point) {
  const int rank = point.domain.rank();
  WeightDegree out;
  out.weight.assign(static_cast<std::size_t>(rank), 0);
  for (int idx = 0; idx < num_positive_roots(rank); ++idx) {
    int v = point.values[static_cast<std::size_t>(idx)];
    if (v == 0) continue;
    PosRoot r = root_at(rank, idx);
    for (int k = r.i; k <= r.j; ++k) out.weight[static_cast<std::size_t>(k - 1)] += v;
    out.degree += v;
  }
  return out;
}

std::map<int, int> degree_histogram(const PointSet& s) {
  std::map<int, int> h;
  for (std::size_t k = 0; k < s.size(); ++k) ++h[weight_and_degree(s.at(k)).degree];
  return h;
}

}  // namespace fflv
