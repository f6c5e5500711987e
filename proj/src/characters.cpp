#include "fflv/characters.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"

#include "fflv/error.hpp"

namespace fflv {

Character Character::monomial(int rank, const Exponent& e, std::int64_t coeff) {
  Character c(rank);
  c.add(e, coeff);
  return c;
}

void Character::add(const Exponent& e, std::int64_t coeff) {
  if (static_cast<int>(e.size()) != rank_ + 1) fail(ErrorCode::InvalidArgument, "exponent vector has wrong length");
  if (coeff == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, coeff);
  } else if ((it->second += coeff) == 0) {
    terms_.erase(it);
  }
}

std::int64_t Character::mass() const {
  std::int64_t m = 0;
  for (const auto& [e, c] : terms_) m += c;
  return m;
}

bool Character::all_positive() const {
  for (const auto& [e, c] : terms_)
    if (c <= 0) return false;
  return true;
}

std::string Character::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      mono << (any ? "*" : "") << "x" << (k + 1);
      if (e[k] != 1) mono << "^" << e[k];
      any = true;
    }
    if (!any) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << mono.str();
    }
  }
  return os.str();
}

std::string Character::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [e, c] : terms_) j[nlohmann::json(e).dump()] = c;
  return j.dump();
}

Exponent to_partition(const DominantWeight& lambda) {
  const int n = lambda.rank();
  Exponent p(static_cast<std::size_t>(n + 1), 0);
  for (int k = n; k >= 1; --k) p[static_cast<std::size_t>(k - 1)] = p[static_cast<std::size_t>(k)] + lambda[k];
  return p;
}

Character demazure_operator(int i, const Character& f) {
  const int n = f.rank();
  if (i < 1 || i > n) fail(ErrorCode::InvalidArgument, "demazure_operator: index out of range");
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = static_cast<std::size_t>(i);

  // numerator x_i f - x_{i+1} s_i f, grouped by the other coordinates and
  // the total degree d in (x_i, x_{i+1}); within a group the key is the x_i exponent.
  std::map<Exponent, std::map<int, std::int64_t>> groups;
  auto put = [&](Exponent e, std::int64_t c) {
    int k = e[a];
    int d = e[a] + e[b];
    e[a] = d;
    e[b] = 0;
    auto& g = groups[e][k];
    g += c;
  };
  for (const auto& [e, c] : f.terms()) {
    Exponent up = e;
    up[a] += 1;
    put(up, c);
    Exponent sw = e;
    std::swap(sw[a], sw[b]);
    sw[b] += 1;
    put(sw, -c);
  }

  Character out(n);
  for (const auto& [key, coeffs] : groups) {
    const int d = key[a];
    // (x_i - x_{i+1}) sum_k q_k x_i^k x_{i+1}^{d-1-k}: c_k = q_{k-1} - q_k
    std::int64_t q = 0;
    auto it = coeffs.rbegin();
    int kmax = it->first;
    int kmin = coeffs.begin()->first;
    for (int k = kmax; k >= kmin; --k) {
      auto found = coeffs.find(k);
      std::int64_t c = found == coeffs.end() ? 0 : found->second;
      q = c + q;  // q_{k-1}
      if (k - 1 < kmin) {
        if (q != 0) fail(ErrorCode::Internal, "demazure_operator: division by (x_i - x_{i+1}) not exact");
        break;
      }
      if (q != 0) {
        Exponent e = key;
        e[a] = k - 1;
        e[b] = d - 1 - (k - 1);
        out.add(e, q);
      }
    }
  }
  return out;
}

Character demazure_character_along(const std::vector<int>& word, const DominantWeight& lambda) {
  Character c = Character::monomial(lambda.rank(), to_partition(lambda));
  for (auto it = word.rbegin(); it != word.rend(); ++it) c = demazure_operator(*it, c);
  return c;
}

Character demazure_character_oracle(const Permutation& w, const DominantWeight& lambda) {
  if (w.rank() != lambda.rank()) fail(ErrorCode::InvalidRank, "permutation and weight ranks differ");
  return demazure_character_along(reduced_word(w), lambda);
}

Exponent act(const Permutation& w, const Exponent& e) {
  Exponent out(e.size(), 0);
  for (int k = 1; k <= w.rank() + 1; ++k) out[static_cast<std::size_t>(w(k) - 1)] = e[static_cast<std::size_t>(k - 1)];
  return out;
}

Character lattice_character_unchecked(const PointSet& points, const DominantWeight& lambda, const Permutation& w) {
  const int n = lambda.rank();
  if (points.rank() != n || w.rank() != n) fail(ErrorCode::InvalidRank, "rank mismatch");
  const Exponent top = to_partition(lambda);
  Character out(n);
  for (const auto& s : points.points()) {
    Exponent e = top;
    for (int idx = 0; idx < num_positive_roots(n); ++idx) {
      int v = s[static_cast<std::size_t>(idx)];
      if (v == 0) continue;
      PosRoot r = root_at(n, idx);
      e[static_cast<std::size_t>(r.i - 1)] -= v;
      e[static_cast<std::size_t>(r.j)] += v;
    }
    out.add(act(w, e), 1);
  }
  return out;
}

Character character_from_lattice_points(const RootSubset& a, const DominantWeight& lambda, const Permutation& w) {
  if (a != inversion_roots(w)) fail(ErrorCode::Contract, "A must equal inversion_roots(w)");
  if (!is_triangular_element(w))
    fail(ErrorCode::Contract, "the lattice-point character formula needs a triangular element");
  return lattice_character_unchecked(enumerate_lattice_points(a, lambda), lambda, w);
}

std::uint64_t weyl_dimension(const DominantWeight& lambda) {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (auto r : all_positive_roots(lambda.rank())) {
    auto h = static_cast<std::uint64_t>(r.height());
    auto top = static_cast<std::uint64_t>(pairing(lambda, r)) + h;
    std::uint64_t g1 = std::gcd(top, den);
    top /= g1;
    den /= g1;
    std::uint64_t g2 = std::gcd(h, num);
    num /= g2;
    h /= g2;
    if (__builtin_mul_overflow(num, top, &num) || __builtin_mul_overflow(den, h, &den))
      fail(ErrorCode::SizeCap, "weyl_dimension overflows 64 bits");
    std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) fail(ErrorCode::Internal, "weyl_dimension: non-integral product");
  return num;
}

}  // namespace fflv
