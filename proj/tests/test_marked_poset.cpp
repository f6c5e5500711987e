#include <functional>

#include "doctest.h"
#include "fflv/error.hpp"
#include "fflv/marked_poset.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace fflv;

namespace {

// Transitive closure of the generating relations on R^+ u M, restricted to A u M.
// Elements: roots of A (canonical order), then markers a_1..a_{n+1}.
struct OraclePoset {
  int n;
  std::vector<PosRoot> roots;
  std::vector<int> marking;            // per marker
  std::vector<std::vector<bool>> gt;   // gt[x][y]: x > y, over A u M

  OraclePoset(const RootSubset& a, const DominantWeight& l) : n(l.rank()), roots(a.members()) {
    const auto all = all_positive_roots(n);
    const int nr = static_cast<int>(all.size());
    const int total = nr + n + 1;
    auto mk = [&](int k) { return nr + k - 1; };
    std::vector<std::vector<bool>> g(static_cast<std::size_t>(total), std::vector<bool>(static_cast<std::size_t>(total)));
    auto set = [&](int x, int y) { g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true; };
    for (int x = 0; x < nr; ++x)
      for (int y = 0; y < nr; ++y) {
        const auto p = all[static_cast<std::size_t>(x)], q = all[static_cast<std::size_t>(y)];
        if (x != y && p.i <= q.i && p.j <= q.j) set(x, y);
      }
    auto idx = [&](int i) { return root_index(n, PosRoot{i, i}); };
    set(mk(1), idx(1));
    for (int k = 2; k <= n; ++k) {
      set(idx(k - 1), mk(k));
      set(mk(k), idx(k));
    }
    set(idx(n), mk(n + 1));
    for (int k = 1; k <= n; ++k) set(mk(k), mk(k + 1));
    for (int z = 0; z < total; ++z)
      for (int x = 0; x < total; ++x)
        for (int y = 0; y < total; ++y)
          if (g[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] &&
              g[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)])
            set(x, y);
    std::vector<int> keep;
    for (auto r : roots) keep.push_back(root_index(n, r));
    for (int k = 1; k <= n + 1; ++k) keep.push_back(mk(k));
    gt.assign(keep.size(), std::vector<bool>(keep.size()));
    for (std::size_t x = 0; x < keep.size(); ++x)
      for (std::size_t y = 0; y < keep.size(); ++y)
        gt[x][y] = g[static_cast<std::size_t>(keep[x])][static_cast<std::size_t>(keep[y])];
    const auto part = oracle::partition(l);
    for (int k = 1; k <= n + 1; ++k) marking.push_back(part[static_cast<std::size_t>(k - 1)]);
  }

  int unmarked() const { return static_cast<int>(roots.size()); }
  int bound() const { return marking.front(); }

  // Enumerate integer assignments in [0, bound] on unmarked elements.
  void each(const std::function<void(const std::vector<int>&)>& f) const {
    std::vector<int> x(roots.size(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t k) {
      if (k == x.size()) {
        f(x);
        return;
      }
      for (int v = 0; v <= bound(); ++v) {
        x[k] = v;
        go(k + 1);
      }
    };
    go(0);
  }

  std::set<std::vector<int>> order_points() const {
    std::set<std::vector<int>> out;
    const int u = unmarked();
    each([&](const std::vector<int>& x) {
      auto val = [&](int e) { return e < u ? x[static_cast<std::size_t>(e)] : marking[static_cast<std::size_t>(e - u)]; };
      const int total = u + n + 1;
      for (int p = 0; p < total; ++p)
        for (int q = 0; q < total; ++q)
          if (gt[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] && (p < u || q < u) && val(p) > val(q)) return;
      out.insert(x);
    });
    return out;
  }

  // Every chain m2 < p_1 < ... < p_s < m1 with unmarked p's.
  std::set<std::vector<int>> chain_points() const {
    const int u = unmarked();
    std::vector<std::pair<std::vector<int>, int>> ineqs;
    std::vector<int> cur;
    std::function<void(int, int)> extend = [&](int top_marker, int last) {
      for (int m = u; m < u + n + 1; ++m)
        if (gt[static_cast<std::size_t>(last)][static_cast<std::size_t>(m)] && !cur.empty())
          ineqs.emplace_back(cur, marking[static_cast<std::size_t>(top_marker - u)] - marking[static_cast<std::size_t>(m - u)]);
      for (int p = 0; p < u; ++p)
        if (gt[static_cast<std::size_t>(last)][static_cast<std::size_t>(p)]) {
          cur.push_back(p);
          extend(top_marker, p);
          cur.pop_back();
        }
    };
    for (int m = u; m < u + n + 1; ++m) extend(m, m);
    std::set<std::vector<int>> out;
    each([&](const std::vector<int>& x) {
      for (const auto& [els, b] : ineqs) {
        int s = 0;
        for (int e : els) s += x[static_cast<std::size_t>(e)];
        if (s > b) return;
      }
      out.insert(x);
    });
    return out;
  }
};

std::set<std::vector<int>> compact(const PointSet& s) {
  std::set<std::vector<int>> out;
  const auto roots = s.domain().members();
  for (const auto& c : s.points()) {
    std::vector<int> v;
    for (auto r : roots) v.push_back(c[static_cast<std::size_t>(root_index(s.rank(), r))]);
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("marked poset structure") {
  const auto empty = build_marked_poset(RootSubset(3), DominantWeight::rho(3));
  CHECK(empty.num_unmarked() == 0);
  CHECK(empty.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  const auto p = build_marked_poset(RootSubset::full(2), DominantWeight::parse("2,5"));
  CHECK(p.num_unmarked() == 3);
  CHECK(p.marking(p.marker(1)) == 7);
  CHECK(p.marking(p.marker(2)) == 5);
  CHECK(p.marking(p.marker(3)) == 0);
  CHECK(p.label(p.marker(2)) == "m2");
  CHECK(p.label(0) == "a1.1");
  const auto j = nlohmann::json::parse(p.to_json());
  CHECK(j["nodes"].size() == 6);
  CHECK(j["edges"].size() == p.covers().size());
  // regular lambda: strictly decreasing markings
  const auto r = build_marked_poset(RootSubset::full(3), DominantWeight::rho(3));
  for (int k = 1; k <= 3; ++k) CHECK(r.marking(r.marker(k)) > r.marking(r.marker(k + 1)));
}

TEST_CASE("marked order relation matches the transitive closure of the generators") {
  for (int n = 1; n <= 4; ++n) {
    const OraclePoset o(RootSubset::full(n), DominantWeight::rho(n));
    const auto p = build_marked_poset(RootSubset::full(n), DominantWeight::rho(n));
    for (int x = 0; x < p.num_elements(); ++x)
      for (int y = 0; y < p.num_elements(); ++y)
        CHECK(p.greater(x, y) == o.gt[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
  }
}

TEST_CASE("marked chain and order points match brute force on every subset of sl_3 and sl_4") {
  for (int n = 2; n <= 3; ++n)
    for (std::uint64_t bits = 0; bits < (1ull << num_positive_roots(n)); ++bits) {
      const RootSubset a(n, bits);
      for (const auto& l : {DominantWeight::rho(n), DominantWeight::fundamental(n, 1)}) {
        const OraclePoset o(a, l);
        const auto p = build_marked_poset(a, l);
        CHECK(compact(marked_order_points(p)) == o.order_points());
        CHECK(compact(marked_chain_points(p)) == o.chain_points());
      }
    }
}

TEST_CASE("A = {alpha_1} in sl_3: order points are m_2 <= x <= m_1 + m_2") {
  const auto l = DominantWeight::parse("2,3");
  const auto pts = marked_order_points(build_marked_poset(RootSubset::parse(2, "1.1"), l));
  REQUIRE(pts.size() == 3);
  CHECK(pts.points().front()[0] == 3);
  CHECK(pts.points().back()[0] == 5);
  CHECK(marked_order_points(build_marked_poset(RootSubset(2), l)).size() == 1);
  CHECK(marked_chain_points(build_marked_poset(RootSubset(2), l)).size() == 1);
}

TEST_CASE("chain points equal S_A(lambda) for triangular A, any dominant lambda") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto a = inversion_roots(w);
      if (!is_triangular_subset(a)) continue;
      for (const auto& l : {DominantWeight::rho(n), DominantWeight::fundamental(n, 1), DominantWeight::fundamental(n, n)}) {
        if (n == 4 && !l.is_regular()) continue;
        CHECK(marked_chain_points(build_marked_poset(a, l)) == enumerate_lattice_points(a, l));
      }
    }
}

TEST_CASE("non-triangular subsets with equal chain polytope exist (alpha_1, alpha_2)") {
  // P_A has s_1 <= m_1, s_2 <= m_2 and the chain polytope has the same facets;
  // the missing Dyck path alpha_1 > alpha_2 would only add s_1 + s_2 <= m_1 + m_2.
  const RootSubset a = RootSubset::parse(2, "1.1,2.2");
  CHECK_FALSE(is_triangular_subset(a));
  const auto l = DominantWeight::rho(2);
  CHECK(marked_chain_points(build_marked_poset(a, l)) == enumerate_lattice_points(a, l));
  // s_1 s_3 s_2 does differ
  const auto b = inversion_roots(Permutation::parse_word(3, "s1 s3 s2"));
  CHECK(marked_chain_points(build_marked_poset(b, DominantWeight::rho(3))).size() == 12);
  CHECK(enumerate_lattice_points(b, DominantWeight::rho(3)).size() == 13);
}

TEST_CASE("chain and order counts agree at dilations 1..3") {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t bits = 0; bits < (1ull << num_positive_roots(n)); ++bits) {
      const RootSubset a(n, bits);
      for (int t = 1; t <= 3; ++t)
        CHECK(ehrhart_count(a, DominantWeight::rho(n), t, MarkedPolytope::Chain) ==
              ehrhart_count(a, DominantWeight::rho(n), t, MarkedPolytope::Order));
    }
  for (int t = 1; t <= 3; ++t) CHECK(ehrhart_count(RootSubset::full(3), DominantWeight::zero(3), t, MarkedPolytope::Chain) == 1);
  CHECK(ehrhart_count(RootSubset::full(2), DominantWeight::rho(2), 1, MarkedPolytope::Chain) ==
        marked_chain_points(build_marked_poset(RootSubset::full(2), DominantWeight::rho(2))).size());
  CHECK_THROWS_AS(ehrhart_count(RootSubset::full(2), DominantWeight::rho(2), 0, MarkedPolytope::Chain), Error);
}
