#include "fflv/paths.hpp"

#include <algorithm>
#include <set>

#include "fflv/error.hpp"

namespace fflv {

namespace {

void extend(int rank, RootPath& cur, std::vector<DyckPath>& out) {
  const PosRoot last = cur.back();
  if (last.is_simple()) out.push_back(DyckPath{rank, cur});
  if (last.i + 1 <= last.j) {
    cur.push_back(PosRoot{last.i + 1, last.j});
    extend(rank, cur, out);
    cur.pop_back();
  }
  if (last.j + 1 <= rank) {
    cur.push_back(PosRoot{last.i, last.j + 1});
    extend(rank, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_dyck_paths(int rank) {
  check_rank(rank);
  std::vector<DyckPath> out;
  for (int k = 1; k <= rank; ++k) {
    RootPath cur{PosRoot{k, k}};
    extend(rank, cur, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PosRoot base_root(const RootPath& p) {
  if (p.empty()) fail(ErrorCode::Domain, "base root of an empty path");
  return PosRoot{p.front().i, p.back().j};
}

RootPath restrict_path(const DyckPath& q, const RootSubset& a) {
  RootPath out;
  for (auto r : q.roots)
    if (a.contains(r)) out.push_back(r);
  return out;
}

bool is_dyck_path_for(const RootPath& p, const RootSubset& a) {
  for (auto row : p)
    for (auto col : p)
      if (row.i <= col.j && !a.contains(PosRoot{row.i, col.j})) return false;
  return true;
}

std::vector<RootPath> connected_blocks(const RootPath& p) {
  std::vector<RootPath> blocks;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k == 0 || p[k - 1].j + 1 < p[k].i) blocks.emplace_back();
    blocks.back().push_back(p[k]);
  }
  return blocks;
}

std::vector<SubsetPath> enumerate_dyck_paths_for(const RootSubset& a, PathSplit split) {
  std::set<RootPath> seen;
  for (const auto& q : enumerate_dyck_paths(a.rank())) {
    RootPath r = restrict_path(q, a);
    if (r.empty()) continue;
    if (split == PathSplit::Blocks) {
      for (auto& b : connected_blocks(r))
        if (is_dyck_path_for(b, a)) seen.insert(std::move(b));
    } else if (is_dyck_path_for(r, a)) {
      seen.insert(std::move(r));
    }
  }
  std::vector<SubsetPath> out;
  out.reserve(seen.size());
  for (const auto& p : seen) out.push_back(SubsetPath{p, base_root(p)});
  return out;
}

}  // namespace fflv
