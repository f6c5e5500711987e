#include "fflv/rep.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "fflv/error.hpp"

namespace fflv {

namespace {

constexpr std::size_t kMaxAmbientDim = 2'000'000;

std::int64_t checked_add_mul(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t p = 0;
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &r))
    fail(ErrorCode::Internal, "integer overflow applying an operator");
  return r;
}

}  // namespace

AmbientSpace::AmbientSpace(int rank, std::vector<int> factors) : rank_(rank), factors_(std::move(factors)) {
  check_rank(rank);
  const int m = rank + 1;
  subsets_.resize(static_cast<std::size_t>(m + 1));
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask)
    subsets_[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  stride_.resize(factors_.size());
  for (std::size_t f = factors_.size(); f-- > 0;) {
    const int k = factors_[f];
    if (k < 1 || k > rank) fail(ErrorCode::InvalidArgument, "tensor factor degree out of range");
    stride_[f] = dim_;
    const std::size_t width = subsets_[static_cast<std::size_t>(k)].size();
    if (dim_ > kMaxAmbientDim / width) fail(ErrorCode::SizeCap, "ambient tensor space too large");
    dim_ *= width;
  }
}

std::shared_ptr<const AmbientSpace> AmbientSpace::for_weight(const DominantWeight& lambda) {
  std::vector<int> factors;
  for (int k = 1; k <= lambda.rank(); ++k)
    for (int c = 0; c < lambda[k]; ++c) factors.push_back(k);
  return std::make_shared<const AmbientSpace>(lambda.rank(), std::move(factors));
}

std::shared_ptr<const AmbientSpace> AmbientSpace::for_tensor(const DominantWeight& lambda, const DominantWeight& mu) {
  if (lambda.rank() != mu.rank()) fail(ErrorCode::InvalidRank, "tensor factors have different ranks");
  std::vector<int> factors = for_weight(lambda)->factors();
  const std::vector<int> more = for_weight(mu)->factors();
  factors.insert(factors.end(), more.begin(), more.end());
  return std::make_shared<const AmbientSpace>(lambda.rank(), std::move(factors));
}

std::uint32_t AmbientSpace::factor_state(std::size_t basis_index, std::size_t f) const {
  const auto& list = subsets_[static_cast<std::size_t>(factors_[f])];
  return list[(basis_index / stride_[f]) % list.size()];
}

IntVector AmbientSpace::highest_vector() const {
  std::size_t idx = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const auto& list = subsets_[static_cast<std::size_t>(factors_[f])];
    std::uint32_t top = (1U << factors_[f]) - 1;
    auto pos = static_cast<std::size_t>(std::find(list.begin(), list.end(), top) - list.begin());
    idx += pos * stride_[f];
  }
  IntVector v(dim_, 0);
  v[idx] = 1;
  return v;
}

Exponent AmbientSpace::weight_of(std::size_t basis_index) const {
  Exponent w(static_cast<std::size_t>(rank_ + 1), 0);
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    std::uint32_t s = factor_state(basis_index, f);
    for (int a = 0; a <= rank_; ++a)
      if ((s >> a) & 1U) ++w[static_cast<std::size_t>(a)];
  }
  return w;
}

IntVector AmbientSpace::apply_elementary(int row, int col, const IntVector& v) const {
  if (row < 1 || col < 1 || row > rank_ + 1 || col > rank_ + 1 || row == col)
    fail(ErrorCode::InvalidArgument, "elementary matrix index out of range");
  const std::uint32_t a_bit = 1U << (row - 1);
  const std::uint32_t b_bit = 1U << (col - 1);
  const int lo = std::min(row, col);
  const int hi = std::max(row, col);
  // bits strictly between the two positions
  const std::uint32_t between = ((1U << (hi - 1)) - 1) & ~((1U << lo) - 1);
  IntVector out(dim_, 0);
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    const std::int64_t c = v[idx];
    if (c == 0) continue;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      const auto& list = subsets_[static_cast<std::size_t>(factors_[f])];
      const std::uint32_t s = factor_state(idx, f);
      if (!(s & b_bit) || (s & a_bit)) continue;
      const std::uint32_t t = (s & ~b_bit) | a_bit;
      const std::int64_t sign = (std::popcount(s & between) % 2) ? -1 : 1;
      const auto old_pos = static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), s) - list.begin());
      const auto new_pos = static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), t) - list.begin());
      const std::size_t target = idx - old_pos * stride_[f] + new_pos * stride_[f];
      out[target] = checked_add_mul(out[target], sign, c);
    }
  }
  return out;
}

IntVector AmbientSpace::apply_lowering(PosRoot a, const IntVector& v) const {
  return apply_elementary(a.j + 1, a.i, v);
}

IntVector AmbientSpace::apply_raising(PosRoot a, const IntVector& v) const {
  return apply_elementary(a.i, a.j + 1, v);
}

ExplicitModule::ExplicitModule(std::shared_ptr<const AmbientSpace> ambient, DominantWeight lambda, IntVector generator)
    : ambient_(std::move(ambient)), lambda_(std::move(lambda)), generator_(std::move(generator)),
      basis_(ambient_->dim()) {
  if (basis_.insert(generator_)) spanning_.push_back(generator_);
}

void ExplicitModule::close_under(const std::vector<Operator>& ops, std::size_t max_dim) {
  std::deque<IntVector> pending(spanning_.begin(), spanning_.end());
  while (!pending.empty()) {
    IntVector v = std::move(pending.front());
    pending.pop_front();
    for (const auto& op : ops) {
      IntVector w = op(v);
      if (is_zero(w) || !basis_.insert(w)) continue;
      if (basis_.rank() > max_dim)
        fail(ErrorCode::SizeCap, "module dimension exceeds the cap of " + std::to_string(max_dim));
      spanning_.push_back(w);
      pending.push_back(std::move(w));
    }
  }
}

namespace {

std::vector<ExplicitModule::Operator> lowering_ops(const AmbientSpace& amb, const std::vector<PosRoot>& roots) {
  std::vector<ExplicitModule::Operator> ops;
  for (auto r : roots) ops.push_back([&amb, r](const IntVector& v) { return amb.apply_lowering(r, v); });
  return ops;
}

}  // namespace

ExplicitModule build_highest_weight_module(const DominantWeight& lambda, std::size_t max_dim) {
  if (weyl_dimension(lambda) > max_dim)
    fail(ErrorCode::SizeCap, "dim V(" + lambda.to_string() + ") = " + std::to_string(weyl_dimension(lambda)) +
                                 " exceeds the cap of " + std::to_string(max_dim));
  auto amb = AmbientSpace::for_weight(lambda);
  ExplicitModule m(amb, lambda, amb->highest_vector());
  std::vector<PosRoot> simple;
  for (int k = 1; k <= lambda.rank(); ++k) simple.push_back(PosRoot{k, k});
  m.close_under(lowering_ops(*amb, simple), max_dim);
  if (m.dim() != weyl_dimension(lambda)) fail(ErrorCode::Internal, "explicit module has the wrong dimension");
  return m;
}

std::optional<Exponent> weight_of_vector(const AmbientSpace& ambient, const IntVector& v) {
  std::optional<Exponent> w;
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx] == 0) continue;
    Exponent e = ambient.weight_of(idx);
    if (w && *w != e) return std::nullopt;
    w = std::move(e);
  }
  return w;
}

IntVector extremal_vector(const ExplicitModule& module, const Permutation& w) {
  const auto& amb = module.ambient();
  if (w.rank() != amb.rank()) fail(ErrorCode::InvalidRank, "permutation rank does not match module");
  const auto word = reduced_word(w);
  Exponent mu = to_partition(module.weight());
  IntVector v = module.generator();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    const int steps = mu[static_cast<std::size_t>(i - 1)] - mu[static_cast<std::size_t>(i)];
    if (steps < 0) fail(ErrorCode::Internal, "extremal_vector: negative string length");
    for (int t = 0; t < steps; ++t) v = amb.apply_lowering(PosRoot{i, i}, v);
    std::swap(mu[static_cast<std::size_t>(i - 1)], mu[static_cast<std::size_t>(i)]);
  }
  if (is_zero(v)) fail(ErrorCode::Internal, "extremal_vector: produced the zero vector");
  make_primitive(v);
  auto wt = weight_of_vector(amb, v);
  if (!wt || *wt != act(w, to_partition(module.weight())))
    fail(ErrorCode::Internal, "extremal_vector: result does not have weight w(lambda)");
  return v;
}

ExplicitModule demazure_submodule(const ExplicitModule& module, const Permutation& w, std::size_t max_dim) {
  auto amb = module.ambient_ptr();
  ExplicitModule d(amb, module.weight(), extremal_vector(module, w));
  std::vector<ExplicitModule::Operator> ops;
  for (auto r : all_positive_roots(amb->rank()))
    ops.push_back([a = amb.get(), r](const IntVector& v) { return a->apply_raising(r, v); });
  d.close_under(ops, max_dim);
  return d;
}

ExplicitModule subset_submodule(const ExplicitModule& module, const RootSubset& a, std::size_t max_dim) {
  auto amb = module.ambient_ptr();
  if (a.rank() != amb->rank()) fail(ErrorCode::InvalidRank, "subset rank does not match module");
  ExplicitModule sub(amb, module.weight(), amb->highest_vector());
  sub.close_under(lowering_ops(*amb, a.members()), max_dim);
  return sub;
}

IntVector apply_monomial(const AmbientSpace& ambient, const Coords& s, const IntVector& v) {
  const int n = ambient.rank();
  IntVector out = v;
  for (int idx = num_positive_roots(n) - 1; idx >= 0; --idx) {
    const int e = s[static_cast<std::size_t>(idx)];
    const PosRoot r = root_at(n, idx);
    for (int t = 0; t < e; ++t) out = ambient.apply_lowering(r, out);
  }
  return out;
}

namespace {

// Echelon bases of M_0 subset M_1 subset ... up to the first stable step.
std::vector<EchelonBasis> filtration_levels(const AmbientSpace& amb, const RootSubset& a, std::size_t max_dim) {
  const auto roots = a.members();
  EchelonBasis basis(amb.dim());
  const IntVector top = amb.highest_vector();
  basis.insert(top);
  std::vector<EchelonBasis> levels{basis};
  std::vector<IntVector> frontier{top};
  // M_{s+1} = M_s + sum_alpha f_alpha M_s; only vectors new in M_s need to be pushed further.
  for (;;) {
    std::vector<IntVector> next;
    for (const auto& v : frontier)
      for (auto r : roots) {
        IntVector w = amb.apply_lowering(r, v);
        if (!is_zero(w) && basis.insert(w)) next.push_back(std::move(w));
      }
    if (basis.rank() > max_dim) fail(ErrorCode::SizeCap, "filtration exceeds the dimension cap");
    if (next.empty()) break;
    levels.push_back(basis);
    frontier = std::move(next);
  }
  return levels;
}

}  // namespace

std::vector<std::size_t> pbw_filtration_profile(const ExplicitModule& module, const RootSubset& a,
                                                std::size_t max_dim) {
  std::vector<std::size_t> dims;
  for (const auto& level : filtration_levels(module.ambient(), a, max_dim)) dims.push_back(level.rank());
  return dims;
}

MonomialBasisReport verify_monomial_basis(const ExplicitModule& module, const RootSubset& a, std::size_t max_dim) {
  const auto& amb = module.ambient();
  const PointSet points = enumerate_lattice_points(a, module.weight());
  MonomialBasisReport rep;
  rep.lattice_points = points.size();
  rep.subset_dim = subset_submodule(module, a, max_dim).dim();

  EchelonBasis basis(amb.dim());
  const IntVector top = amb.highest_vector();
  std::map<int, std::vector<IntVector>> by_degree;
  for (const auto& s : points.points()) {
    IntVector v = apply_monomial(amb, s, top);
    if (!basis.insert(v) && !rep.witness) rep.witness = s;
    int deg = 0;
    for (int x : s) deg += x;
    by_degree[deg].push_back(std::move(v));
  }
  rep.rank = basis.rank();
  rep.independent = rep.rank == rep.lattice_points;
  rep.spanning = rep.rank == rep.subset_dim;

  // Graded check: the degree-d vectors stay independent modulo M_{d-1}.
  const auto levels = filtration_levels(amb, a, max_dim);
  rep.graded_independent = by_degree[0].size() == 1;
  for (const auto& [deg, vecs] : by_degree) {
    if (deg == 0) continue;
    EchelonBasis probe = levels[std::min(static_cast<std::size_t>(deg - 1), levels.size() - 1)];
    for (const auto& v : vecs)
      if (!probe.insert(v)) rep.graded_independent = false;
  }
  return rep;
}

std::vector<PosRoot> essential_variable_order(const RootSubset& a) {
  auto roots = a.members();
  std::sort(roots.begin(), roots.end(), [](PosRoot x, PosRoot y) {
    if (x.height() != y.height()) return x.height() > y.height();
    return x.i < y.i;
  });
  return roots;
}

namespace {

void compositions(int total, std::size_t parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts, cur, out);
    cur.pop_back();
  }
}

// Strict "x < y" for equal-degree exponent vectors indexed by the variable
// order (index 0 = largest variable).
bool smaller_same_degree(const std::vector<int>& x, const std::vector<int>& y, MonomialOrder order) {
  if (order == MonomialOrder::HomogeneousLex) {
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k] != y[k]) return x[k] < y[k];
    return false;
  }
  // reverse lexicographic: the last differing variable decides, more of it is smaller
  for (std::size_t k = x.size(); k-- > 0;)
    if (x[k] != y[k]) return x[k] > y[k];
  return false;
}

}  // namespace

PointSet essential_monomials(const ExplicitModule& module, const RootSubset& a, MonomialOrder order,
                             std::size_t max_dim) {
  const auto& amb = module.ambient();
  const int n = amb.rank();
  const std::size_t target = subset_submodule(module, a, max_dim).dim();
  const auto vars = essential_variable_order(a);
  const IntVector top = amb.highest_vector();

  EchelonBasis basis(amb.dim());
  std::vector<Coords> essential;
  Coords zero(static_cast<std::size_t>(num_positive_roots(n)), 0);
  if (basis.insert(top)) essential.push_back(zero);
  if (vars.empty()) return PointSet(a, std::move(essential));

  // The order is homogeneous, so degrees are processed in turn; within a
  // degree, monomials are visited in increasing order.
  for (int degree = 1; basis.rank() < target; ++degree) {
    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    compositions(degree, vars.size(), cur, monos);
    std::sort(monos.begin(), monos.end(),
              [order](const auto& x, const auto& y) { return smaller_same_degree(x, y, order); });
    for (const auto& m : monos) {
      Coords s = zero;
      for (std::size_t k = 0; k < vars.size(); ++k) s[static_cast<std::size_t>(root_index(n, vars[k]))] = m[k];
      if (basis.insert(apply_monomial(amb, s, top))) essential.push_back(s);
      if (basis.rank() == target) break;
    }
  }
  return PointSet(a, std::move(essential));
}

std::size_t cartan_component_dimension(const DominantWeight& lambda, const DominantWeight& mu, const RootSubset& a,
                                       std::size_t max_dim) {
  if (a.rank() != lambda.rank()) fail(ErrorCode::InvalidRank, "subset rank does not match weights");
  auto amb = AmbientSpace::for_tensor(lambda, mu);
  ExplicitModule m(amb, lambda + mu, amb->highest_vector());
  m.close_under(lowering_ops(*amb, a.members()), max_dim);
  return m.dim();
}

}  // namespace fflv
