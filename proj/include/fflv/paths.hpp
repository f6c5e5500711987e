#pragma once

#include <vector>

#include "fflv/roots.hpp"
#include "fflv/weyl.hpp"

namespace fflv {

/// Ordered root sequence, strictly decreasing in the Dyck-path order.
using RootPath = std::vector<PosRoot>;

/// Full Dyck path: starts and ends at simple roots, each step goes
/// (i, j) -> (i+1, j) or (i, j) -> (i, j+1).
struct DyckPath {
  int rank = 0;
  RootPath roots;

  auto operator<=>(const DyckPath&) const = default;
};

/// Path for a subset A together with its base root alpha_{i_1, j_s}.
struct SubsetPath {
  RootPath roots;
  PosRoot base;

  auto operator<=>(const SubsetPath&) const = default;
};

/// How restrictions q n A whose consecutive supports are disconnected are treated.
enum class PathSplit {
  /// Split into maximal connected blocks and test each block separately.
  Blocks,
  /// Test the whole restriction as a single candidate.
  Whole,
};

/// All Dyck paths for sl_{n+1}, sorted by root sequence.
std::vector<DyckPath> enumerate_dyck_paths(int rank);

/// alpha_{first.i, last.j}; throws Error(Domain) for an empty path.
PosRoot base_root(const RootPath& p);

/// Subsequence of q lying in A.
RootPath restrict_path(const DyckPath& q, const RootSubset& a);

/// Grid condition: alpha_{i_k, j_l} in A for all k, l with i_k <= j_l.
bool is_dyck_path_for(const RootPath& p, const RootSubset& a);

/// Maximal blocks with j_s + 1 >= i_{s+1} between consecutive entries.
std::vector<RootPath> connected_blocks(const RootPath& p);

/// Deduplicated Dyck paths for A obtained by restricting every full Dyck path.
std::vector<SubsetPath> enumerate_dyck_paths_for(const RootSubset& a, PathSplit split = PathSplit::Blocks);

}  // namespace fflv
