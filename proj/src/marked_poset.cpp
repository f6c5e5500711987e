#include "fflv/marked_poset.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "json.hpp"

#include "fflv/error.hpp"

namespace fflv {

bool marked_order_greater(int rank, bool x_marked, int x_marker, PosRoot x_root, bool y_marked, int y_marker,
                          PosRoot y_root) {
  if (x_marked && y_marked) return x_marker < y_marker;
  if (x_marked) return x_marker <= rank && x_marker <= y_root.i;
  if (y_marked) return x_root.j < y_marker;
  return x_root != y_root && leq_ffl(x_root, y_root);
}

MarkedPoset::MarkedPoset(const RootSubset& a, const DominantWeight& lambda)
    : a_(a), lambda_(lambda), roots_(a.members()) {
  if (a.rank() != lambda.rank()) fail(ErrorCode::InvalidRank, "subset and weight ranks differ");
  const int n = rank();
  markings_.assign(static_cast<std::size_t>(n + 1), 0);
  for (int k = n; k >= 1; --k)
    markings_[static_cast<std::size_t>(k - 1)] = markings_[static_cast<std::size_t>(k)] + lambda[k];

  const int total = num_elements();
  for (int x = 0; x < total; ++x)
    for (int y = 0; y < total; ++y) {
      if (!greater(x, y)) continue;
      bool covered = true;
      for (int z = 0; z < total && covered; ++z)
        if (greater(x, z) && greater(z, y)) covered = false;
      if (covered) covers_.emplace_back(x, y);
    }
  std::sort(covers_.begin(), covers_.end());
}

int MarkedPoset::marking(int e) const {
  if (!is_marked(e)) fail(ErrorCode::InvalidArgument, "element is not marked");
  return markings_[static_cast<std::size_t>(e - num_unmarked())];
}

std::string MarkedPoset::label(int e) const {
  if (is_marked(e)) return "m" + std::to_string(e - num_unmarked() + 1);
  return root(e).name();
}

bool MarkedPoset::greater(int x, int y) const {
  auto info = [&](int e) {
    bool marked = is_marked(e);
    int k = marked ? e - num_unmarked() + 1 : 0;
    PosRoot r = marked ? PosRoot{} : root(e);
    return std::tuple{marked, k, r};
  };
  auto [xm, xk, xr] = info(x);
  auto [ym, yk, yr] = info(y);
  return marked_order_greater(rank(), xm, xk, xr, ym, yk, yr);
}

std::vector<MarkedPoset::ChainInequality> MarkedPoset::chain_inequalities() const {
  const int total = num_elements();
  std::vector<std::vector<int>> below(static_cast<std::size_t>(total));
  for (auto [hi, lo] : covers_) below[static_cast<std::size_t>(hi)].push_back(lo);

  std::vector<ChainInequality> out;
  std::vector<int> chain;
  auto walk = [&](auto&& self, int top, int cur) -> void {
    for (int nxt : below[static_cast<std::size_t>(cur)]) {
      if (is_marked(nxt)) {
        if (!chain.empty()) out.push_back(ChainInequality{chain, marking(top) - marking(nxt)});
        continue;
      }
      chain.push_back(nxt);
      self(self, top, nxt);
      chain.pop_back();
    }
  };
  for (int k = 1; k <= rank() + 1; ++k) walk(walk, marker(k), marker(k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string MarkedPoset::to_json() const {
  nlohmann::ordered_json j;
  j["rank"] = rank();
  j["lambda"] = lambda_.coeffs();
  auto nodes = nlohmann::ordered_json::array();
  for (int e = 0; e < num_elements(); ++e) {
    nlohmann::ordered_json node;
    node["id"] = e;
    node["label"] = label(e);
    node["marked"] = is_marked(e);
    if (is_marked(e)) {
      node["marking"] = marking(e);
    } else {
      node["root"] = {root(e).i, root(e).j};
    }
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  auto edges = nlohmann::ordered_json::array();
  for (auto [hi, lo] : covers_) edges.push_back({hi, lo});
  j["edges"] = std::move(edges);
  return j.dump();
}

MarkedPoset build_marked_poset(const RootSubset& a, const DominantWeight& lambda) { return MarkedPoset(a, lambda); }

PointSet marked_chain_points(const MarkedPoset& p) {
  const int rank = p.rank();
  const int u = p.num_unmarked();
  const auto ineqs = p.chain_inequalities();
  std::vector<std::vector<int>> touching(static_cast<std::size_t>(u));
  std::vector<int> slack;
  for (std::size_t q = 0; q < ineqs.size(); ++q) {
    slack.push_back(ineqs[q].bound);
    for (int e : ineqs[q].elements) touching[static_cast<std::size_t>(e)].push_back(static_cast<int>(q));
  }
  for (int e = 0; e < u; ++e)
    if (touching[static_cast<std::size_t>(e)].empty())
      fail(ErrorCode::Internal, "unmarked element " + p.label(e) + " lies on no marked chain");

  std::vector<Coords> found;
  Coords cur(static_cast<std::size_t>(num_positive_roots(rank)), 0);
  auto run = [&](auto&& self, int e) -> void {
    if (e == u) {
      found.push_back(cur);
      return;
    }
    int cap = std::numeric_limits<int>::max();
    for (int q : touching[static_cast<std::size_t>(e)]) cap = std::min(cap, slack[static_cast<std::size_t>(q)]);
    const auto c = static_cast<std::size_t>(root_index(rank, p.root(e)));
    for (int v = 0; v <= cap; ++v) {
      cur[c] = v;
      for (int q : touching[static_cast<std::size_t>(e)]) slack[static_cast<std::size_t>(q)] -= v;
      self(self, e + 1);
      for (int q : touching[static_cast<std::size_t>(e)]) slack[static_cast<std::size_t>(q)] += v;
    }
    cur[c] = 0;
  };
  run(run, 0);
  return PointSet(p.subset(), std::move(found));
}

PointSet marked_order_points(const MarkedPoset& p) {
  const int rank = p.rank();
  const int u = p.num_unmarked();
  // Canonical root order is a linear extension read from the top, so every
  // element above e is assigned before e.
  std::vector<int> lo(static_cast<std::size_t>(u), 0);
  std::vector<int> hi(static_cast<std::size_t>(u), std::numeric_limits<int>::max());
  std::vector<std::vector<int>> above(static_cast<std::size_t>(u));
  for (int e = 0; e < u; ++e) {
    for (int k = 1; k <= rank + 1; ++k) {
      int m = p.marker(k);
      if (p.greater(m, e)) hi[static_cast<std::size_t>(e)] = std::min(hi[static_cast<std::size_t>(e)], p.marking(m));
      if (p.greater(e, m)) lo[static_cast<std::size_t>(e)] = std::max(lo[static_cast<std::size_t>(e)], p.marking(m));
    }
    for (int f = 0; f < e; ++f)
      if (p.greater(f, e)) above[static_cast<std::size_t>(e)].push_back(f);
  }

  std::vector<Coords> found;
  std::vector<int> x(static_cast<std::size_t>(u), 0);
  Coords cur(static_cast<std::size_t>(num_positive_roots(rank)), 0);
  auto run = [&](auto&& self, int e) -> void {
    if (e == u) {
      found.push_back(cur);
      return;
    }
    const auto se = static_cast<std::size_t>(e);
    int top = hi[se];
    for (int f : above[se]) top = std::min(top, x[static_cast<std::size_t>(f)]);
    const auto c = static_cast<std::size_t>(root_index(rank, p.root(e)));
    for (int v = lo[se]; v <= top; ++v) {
      x[se] = v;
      cur[c] = v;
      self(self, e + 1);
    }
    cur[c] = 0;
  };
  run(run, 0);
  return PointSet(p.subset(), std::move(found));
}

std::size_t ehrhart_count(const RootSubset& a, const DominantWeight& lambda, int t, MarkedPolytope which) {
  if (t < 1) fail(ErrorCode::InvalidArgument, "dilation t must be >= 1");
  MarkedPoset p(a, lambda.scaled(t));
  return which == MarkedPolytope::Chain ? marked_chain_points(p).size() : marked_order_points(p).size();
}

}  // namespace fflv
