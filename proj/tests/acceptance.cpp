// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "fflv/characters.hpp"
#include "fflv/error.hpp"
#include "fflv/marked_poset.hpp"
#include "fflv/polytope.hpp"
#include "fflv/rep.hpp"
#include "fflv/weyl.hpp"
#include "oracles.hpp"

using namespace fflv;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;
  void note(const std::string& what) {
    if (!notes.str().empty()) notes << "; ";
    notes << what;
  }
  void require(bool cond, const std::string& what) {
    if (cond) return;
    note("FAILED " + what);
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(dt <= budget_s, "took " + std::to_string(dt) + " s, budget " + std::to_string(budget_s) + " s");
  if (!o.ok) ++failures;
  const std::string notes = o.notes.str();
  std::printf("%s %d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, dt, notes.empty() ? "" : "  ", notes.c_str());
  std::fflush(stdout);
}

std::set<std::vector<int>> lib_set(const PointSet& s) { return oracle::as_set(s); }

std::set<std::vector<int>> sum_sets(const std::set<std::vector<int>>& a, const std::set<std::vector<int>>& b) {
  std::set<std::vector<int>> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      auto z = x;
      for (std::size_t k = 0; k < z.size(); ++k) z[k] += y[k];
      out.insert(z);
    }
  return out;
}

std::vector<Permutation> triangular_elements(int n) {
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n))
    if (is_triangular_element(w)) out.push_back(w);
  return out;
}

std::string name(const Permutation& w) { return "[" + w.oneline() + "]"; }

// Weights with every coefficient in 0..c.
std::vector<DominantWeight> weights_up_to(int n, int c) {
  std::vector<DominantWeight> out;
  std::vector<int> m(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.emplace_back(m);
    int k = 0;
    while (k < n && m[static_cast<std::size_t>(k)] == c) m[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
    ++m[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "weyl sweep S_4, S_5", 1.0, [](Outcome& o) {
    for (int n = 3; n <= 4; ++n) {
      const auto table = oracle::kempf_table(n);
      int kempf = 0;
      for (const auto& w : all_permutations(n)) {
        const bool k = is_kempf(w);
        o.require(k == table.at(w.images()), "Kempf test disagrees with segment enumeration at " + name(w));
        if (k) {
          ++kempf;
          o.require(is_triangular_element(w), "Kempf but not triangular: " + name(w));
        }
      }
      o.note("S_" + std::to_string(n + 1) + ": " + std::to_string(kempf) + " Kempf");
    }
    const auto u = Permutation::parse_word(3, "s1 s3 s2");
    o.require(!is_triangular_element(u), "s1 s3 s2 is triangular");
    const auto t = Permutation::parse_word(3, "s2 s3 s1");
    o.require(is_triangular_element(t) && !is_kempf(t), "s2 s3 s1 is not triangular-not-Kempf");
    std::set<std::pair<int, int>> inv;
    for (auto r : inversion_roots(t).members()) inv.insert({r.i, r.j});
    o.require(inv == std::set<std::pair<int, int>>{{1, 1}, {3, 3}, {1, 3}}, "inversion set of s2 s3 s1");
    o.require(inv == oracle::inversions_from_word(3, {2, 3, 1}), "inversion set of s2 s3 s1 vs word recursion");
  });

  criterion(2, "triangular element iff triangular inversion set, S_5", 5.0, [](Outcome& o) {
    int tri = 0;
    for (const auto& w : all_permutations(4)) {
      const bool e = is_triangular_element(w);
      o.require(e == is_triangular_subset(inversion_roots(w)), "mismatch at " + name(w));
      tri += e;
    }
    o.note(std::to_string(tri) + " of 120 triangular");
  });

  criterion(3, "|S(lambda)| = Weyl dimension", 10.0, [](Outcome& o) {
    int cases = 0;
    for (int n = 2; n <= 3; ++n)
      for (const auto& l : weights_up_to(n, 2)) {
        const auto s = enumerate_lattice_points(RootSubset::full(n), l);
        o.require(s.size() == oracle::weyl_dim(l), "n=" + std::to_string(n) + " lambda=" + l.to_string());
        ++cases;
      }
    const auto r4 = enumerate_lattice_points(RootSubset::full(4), DominantWeight::rho(4));
    o.require(r4.size() == oracle::weyl_dim(DominantWeight::rho(4)), "n=4 rho");
    o.require(enumerate_lattice_points(RootSubset::full(2), DominantWeight::rho(2)).size() == 8, "sl_3 adjoint != 8");
    o.require(enumerate_lattice_points(RootSubset::full(3), DominantWeight::rho(3)).size() == 64, "sl_4 rho != 64");
    o.note(std::to_string(cases + 1) + " weights, sl_5 rho = " + std::to_string(r4.size()));
  });

  criterion(4, "face and Minkowski property, triangular A in S_4", 60.0, [](Outcome& o) {
    const int n = 3;
    std::vector<DominantWeight> ws{DominantWeight::fundamental(n, 1), DominantWeight::fundamental(n, 2),
                                   DominantWeight::fundamental(n, 3), DominantWeight::rho(n)};
    const auto full_rho = enumerate_lattice_points(RootSubset::full(n), DominantWeight::rho(n));
    int checks = 0;
    for (const auto& w : triangular_elements(n)) {
      const auto a = inversion_roots(w);
      std::vector<std::set<std::vector<int>>> base;
      for (const auto& l : ws) {
        const auto s = lib_set(enumerate_lattice_points(a, l));
        o.require(s == oracle::box_points(a, l), "S_A mismatch vs box scan at " + name(w) + " " + l.to_string());
        base.push_back(s);
      }
      o.require(lib_set(restrict_to_face(full_rho, a)) == base[3], "face of P(rho) differs at " + name(w));
      for (std::size_t x = 0; x < ws.size(); ++x)
        for (std::size_t y = x; y < ws.size(); ++y) {
          o.require(sum_sets(base[x], base[y]) == lib_set(enumerate_lattice_points(a, ws[x] + ws[y])),
                    "S_A(l)+S_A(m) at " + name(w) + " " + ws[x].to_string() + " + " + ws[y].to_string());
          ++checks;
        }
      for (std::size_t x = 0; x < ws.size(); ++x) {
        auto acc = base[x];
        for (int k = 2; k <= 3; ++k) {
          acc = sum_sets(acc, base[x]);
          o.require(acc == lib_set(enumerate_lattice_points(a, ws[x].scaled(k))),
                    "S_A(kl) at " + name(w) + " k=" + std::to_string(k));
          ++checks;
        }
      }
    }
    o.note(std::to_string(checks) + " set equalities");
  });

  criterion(5, "marked chain polytopes", 60.0, [](Outcome& o) {
    for (const auto& w : triangular_elements(3)) {
      const auto a = inversion_roots(w);
      const auto l = DominantWeight::rho(3);
      o.require(marked_chain_points(build_marked_poset(a, l)) == enumerate_lattice_points(a, l),
                "chain points != S_A at triangular " + name(w));
    }
    // iff over all 64 subsets of R^+ at n = 3, lambda = rho
    const auto l = DominantWeight::rho(3);
    std::vector<std::string> equal_not_tri;
    int tri_unequal = 0, unbounded = 0;
    for (std::uint64_t bits = 0; bits < 64; ++bits) {
      const RootSubset a(3, bits);
      const bool tri = is_triangular_subset(a);
      bool equal = false;
      if (oracle::unbounded(a, l)) {
        ++unbounded;
      } else {
        const auto s = enumerate_lattice_points(a, l);
        o.require(oracle::as_set(s) == oracle::box_points(a, l), "S_A vs box scan at {" + a.to_string() + "}");
        equal = marked_chain_points(build_marked_poset(a, l)) == s;
      }
      if (tri && !equal) ++tri_unequal;
      if (!tri && equal) equal_not_tri.push_back("{" + a.to_string() + "}");
      for (int t = 1; t <= 3; ++t)
        o.require(ehrhart_count(a, l, t, MarkedPolytope::Chain) == ehrhart_count(a, l, t, MarkedPolytope::Order),
                  "chain count != order count at {" + a.to_string() + "} t=" + std::to_string(t));
    }
    o.require(tri_unequal == 0, std::to_string(tri_unequal) + " triangular subsets with chain points != S_A");
    if (!equal_not_tri.empty()) {
      std::string list;
      for (std::size_t k = 0; k < equal_not_tri.size(); ++k) list += (k ? " " : "") + equal_not_tri[k];
      o.require(false, "iff fails: " + std::to_string(equal_not_tri.size()) +
                           " non-triangular subsets have chain points = S_A: " + list);
    }
    o.note(std::to_string(unbounded) + " non-triangular subsets with unbounded P_A");
  });

  criterion(6, "Demazure characters", 30.0, [](Outcome& o) {
    int cases = 0;
    for (const auto& w : triangular_elements(3)) {
      const auto l = DominantWeight::rho(3);
      const auto c = character_from_lattice_points(inversion_roots(w), l, w);
      o.require(c.terms() == oracle::demazure(l, reduced_word(w)), "character mismatch at " + name(w));
      ++cases;
    }
    for (const auto& w : all_permutations(2))
      for (const char* lt : {"1,1", "2,1", "2,2"}) {
        const auto l = DominantWeight::parse(lt);
        const auto c = character_from_lattice_points(inversion_roots(w), l, w);
        o.require(c.terms() == oracle::demazure(l, reduced_word(w)), "character mismatch at " + name(w) + " " + lt);
        ++cases;
      }
    const auto u = Permutation::parse_word(3, "s1 s3 s2");
    const auto l = DominantWeight::rho(3);
    const auto a = inversion_roots(u);
    const auto pts = enumerate_lattice_points(a, l);
    const auto oracle_mass = oracle::mass(oracle::demazure(l, reduced_word(u)));
    const auto face = restrict_to_face(enumerate_lattice_points(RootSubset::full(3), l), a);
    o.note(std::to_string(cases) + " characters; s1 s3 s2 at rho: |S_A| = " + std::to_string(pts.size()) +
           ", oracle mass = " + std::to_string(oracle_mass) + ", face of P(rho) = " + std::to_string(face.size()));
    o.require(static_cast<std::int64_t>(pts.size()) < oracle_mass, "|S_A(rho)| is not below the oracle mass for s1 s3 s2");
  });

  criterion(7, "explicit modules", 300.0, [](Outcome& o) {
    std::vector<std::pair<Permutation, DominantWeight>> cases;
    for (const auto& w : triangular_elements(2))
      for (const char* lt : {"1,1", "2,1"}) cases.emplace_back(w, DominantWeight::parse(lt));
    for (const auto& w : triangular_elements(3)) cases.emplace_back(w, DominantWeight::rho(3));
    for (const auto& [w, l] : cases) {
      const auto a = inversion_roots(w);
      const auto m = build_highest_weight_module(l);
      const auto pts = enumerate_lattice_points(a, l);
      const auto tag = name(w) + " " + l.to_string();
      o.require(oracle::as_set(pts) == oracle::box_points(a, l), "S_A vs box scan at " + tag);
      const auto r = verify_monomial_basis(m, a);
      o.require(r.independent, "monomials dependent at " + tag);
      o.require(r.spanning, "monomials do not span V_A at " + tag);
      std::vector<IntVector> rows;
      for (const auto& s : pts.points()) rows.push_back(apply_monomial(m.ambient(), s, m.generator()));
      o.require(oracle::rank_mod_p(rows) == pts.size(), "rank mod p below |S_A| at " + tag);
      const auto va = subset_submodule(m, a).dim();
      const auto vw = demazure_submodule(m, w).dim();
      o.require(va == pts.size() && vw == pts.size(), "dim V_A / V_w != |S_A| at " + tag);
      o.require(static_cast<std::int64_t>(vw) == oracle::mass(oracle::demazure(l, reduced_word(w))),
                "dim V_w != Demazure mass at " + tag);
      const auto prof = pbw_filtration_profile(m, a);
      std::map<int, int> hist;
      for (const auto& s : pts.points()) {
        int d = 0;
        for (int x : s) d += x;
        ++hist[d];
      }
      bool incr = prof.size() == hist.size();
      for (std::size_t s = 0; incr && s < prof.size(); ++s) {
        const std::size_t prev = s ? prof[s - 1] : 0;
        incr = hist.count(static_cast<int>(s)) && prof[s] - prev == static_cast<std::size_t>(hist[static_cast<int>(s)]);
      }
      o.require(incr, "PBW increments differ from the degree histogram at " + tag);
    }
    o.note(std::to_string(cases.size()) + " cases");
  });

  criterion(8, "essential monomials and Cartan component, sl_3", 60.0, [](Outcome& o) {
    int cases = 0;
    for (const auto& w : triangular_elements(2))
      for (const auto& l : {DominantWeight::fundamental(2, 1), DominantWeight::rho(2)}) {
        const auto a = inversion_roots(w);
        const auto tag = name(w) + " " + l.to_string();
        const auto pts = enumerate_lattice_points(a, l);
        o.require(oracle::as_set(pts) == oracle::box_points(a, l), "S_A vs box scan at " + tag);
        const auto m = build_highest_weight_module(l);
        o.require(essential_monomials(m, a) == pts, "essential monomials != S_A at " + tag);
        const auto twice = oracle::box_points(a, l.scaled(2));
        o.require(cartan_component_dimension(l, l, a) == twice.size(), "Cartan component != |S_A(2 lambda)| at " + tag);
        ++cases;
      }
    o.note(std::to_string(cases) + " cases");
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
