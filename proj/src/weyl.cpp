#include "fflv/weyl.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "fflv/error.hpp"
#include "text_util.hpp"

namespace fflv {

Permutation::Permutation(int rank, std::vector<int> images) : rank_(rank), images_(std::move(images)) {
  check_rank(rank);
  if (static_cast<int>(images_.size()) != rank + 1)
    fail(ErrorCode::InvalidArgument, "permutation of rank " + std::to_string(rank) + " needs " +
                                         std::to_string(rank + 1) + " images");
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > rank + 1 || seen[static_cast<std::size_t>(v)])
      fail(ErrorCode::InvalidArgument, "not a permutation of {1, ..., " + std::to_string(rank + 1) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int rank) {
  std::vector<int> im(static_cast<std::size_t>(rank + 1));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(rank, std::move(im));
}

Permutation Permutation::simple(int rank, int i) {
  if (i < 1 || i > rank)
    fail(ErrorCode::InvalidArgument, "simple reflection s" + std::to_string(i) + " outside rank " +
                                         std::to_string(rank));
  auto w = identity(rank);
  std::swap(w.images_[static_cast<std::size_t>(i - 1)], w.images_[static_cast<std::size_t>(i)]);
  return w;
}

Permutation Permutation::longest(int rank) {
  std::vector<int> im(static_cast<std::size_t>(rank + 1));
  for (int k = 0; k <= rank; ++k) im[static_cast<std::size_t>(k)] = rank + 1 - k;
  return Permutation(rank, std::move(im));
}

Permutation Permutation::from_word(int rank, const std::vector<int>& word) {
  auto w = identity(rank);
  for (int i : word) w = compose(w, simple(rank, i));
  return w;
}

Permutation Permutation::parse_oneline(const std::string& text) {
  std::vector<int> im;
  for (const auto& tok : detail::split_ws(text)) {
    auto v = detail::parse_int(tok);
    if (!v) fail(ErrorCode::InvalidArgument, "malformed one-line permutation '" + text + "'");
    im.push_back(*v);
  }
  if (im.size() < 2) fail(ErrorCode::InvalidArgument, "one-line permutation needs at least 2 entries");
  int rank = static_cast<int>(im.size()) - 1;
  return Permutation(rank, std::move(im));
}

Permutation Permutation::parse_word(int rank, const std::string& text) {
  check_rank(rank);
  std::vector<int> word;
  for (auto tok : detail::split_ws(text)) {
    if (tok == "id" || tok == "e") continue;
    if (tok[0] == 's' || tok[0] == 'S') tok.erase(0, 1);
    auto v = detail::parse_int(tok);
    if (!v) fail(ErrorCode::InvalidArgument, "malformed generator word '" + text + "'");
    word.push_back(*v);
  }
  return from_word(rank, word);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k)
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  return Permutation(rank_, std::move(inv));
}

int Permutation::length() const {
  int len = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = a + 1; b < images_.size(); ++b)
      if (images_[a] > images_[b]) ++len;
  return len;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

std::string Permutation::oneline() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < images_.size(); ++k) os << (k ? " " : "") << images_[k];
  return os.str();
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank()) fail(ErrorCode::InvalidRank, "compose: rank mismatch");
  std::vector<int> im(static_cast<std::size_t>(u.rank() + 1));
  for (int k = 1; k <= u.rank() + 1; ++k) im[static_cast<std::size_t>(k - 1)] = u(v(k));
  return Permutation(u.rank(), std::move(im));
}

std::vector<Permutation> all_permutations(int rank) {
  check_rank(rank);
  std::vector<int> im(static_cast<std::size_t>(rank + 1));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(rank, im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

RootSubset::RootSubset(int rank, std::uint64_t bits) : rank_(rank), bits_(bits) {
  check_rank(rank);
  int n = num_positive_roots(rank);
  if (n < 64 && (bits >> n) != 0) fail(ErrorCode::InvalidArgument, "root subset bits exceed rank");
}

RootSubset::RootSubset(int rank, const std::vector<PosRoot>& members) : RootSubset(rank) {
  for (auto a : members) insert(a);
}

RootSubset RootSubset::full(int rank) {
  check_rank(rank);
  int n = num_positive_roots(rank);
  return RootSubset(rank, n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
}

RootSubset RootSubset::parse(int rank, const std::string& text) {
  std::string t = detail::trim(text);
  if (t == "all" || t == "R+") return full(rank);
  RootSubset out(rank);
  for (const auto& tok : detail::split_ws(t)) out.insert(parse_root(tok));
  return out;
}

bool RootSubset::contains(PosRoot a) const {
  if (!is_valid_root(rank_, a)) return false;
  return (bits_ >> root_index(rank_, a)) & 1U;
}

void RootSubset::insert(PosRoot a) {
  if (!is_valid_root(rank_, a))
    fail(ErrorCode::InvalidArgument, "root " + a.name() + " outside rank " + std::to_string(rank_));
  bits_ |= std::uint64_t{1} << root_index(rank_, a);
}

void RootSubset::erase(PosRoot a) {
  if (is_valid_root(rank_, a)) bits_ &= ~(std::uint64_t{1} << root_index(rank_, a));
}

int RootSubset::size() const { return std::popcount(bits_); }

std::vector<PosRoot> RootSubset::members() const {
  std::vector<PosRoot> out;
  for (int idx = 0; idx < num_positive_roots(rank_); ++idx)
    if ((bits_ >> idx) & 1U) out.push_back(root_at(rank_, idx));
  return out;
}

std::string RootSubset::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto a : members()) {
    os << (first ? "" : ",") << a.i << "." << a.j;
    first = false;
  }
  return os.str();
}

RootSubset inversion_roots(const Permutation& w) {
  RootSubset out(w.rank());
  for (int i = 1; i <= w.rank(); ++i)
    for (int j = i; j <= w.rank(); ++j)
      if (w(i) > w(j + 1)) out.insert(PosRoot{i, j});
  return out;
}

bool is_triangular_element(const Permutation& w) {
  const int m = w.rank() + 1;
  for (int i = 1; i <= m; ++i)
    for (int k = i + 1; k <= m; ++k)
      for (int j = k; j <= m; ++j) {
        if (!(w(i) > w(j))) continue;
        for (int l = j + 1; l <= m; ++l) {
          if (!(w(k) > w(l))) continue;
          if (!(w(i) > w(l) && w(k) >= w(j))) return false;
        }
      }
  return true;
}

bool is_triangular_subset(const RootSubset& a) {
  const auto members = a.members();
  for (auto p : members)
    for (auto q : members) {
      if (!(p.i < q.i && p.j < q.j && q.i <= p.j + 1)) continue;
      if (!a.contains(PosRoot{p.i, q.j})) return false;
      if (q.i <= p.j && !a.contains(PosRoot{q.i, p.j})) return false;
    }
  return true;
}

namespace {

// w_i = s_{end} o ... o s_{i+1} o s_i
Permutation segment(int rank, int i, int end) {
  auto w = Permutation::identity(rank);
  for (int k = end; k >= i; --k) w = compose(w, Permutation::simple(rank, k));
  return w;
}

}  // namespace

KempfFactorization kempf_factorization(const Permutation& w) {
  const int n = w.rank();
  KempfFactorization f;
  // Peel w = w_1 (w_2 ... w_n); the tail lies in <s_{i+1}, ..., s_n> and fixes i,
  // so the current remainder sends i to l_i + 1.
  Permutation rest = w;
  for (int i = 1; i <= n; ++i) {
    int end = rest(i) - 1;
    if (end < i - 1 || end > n)
      fail(ErrorCode::Internal, "kempf factorization failed for [" + w.oneline() + "]");
    f.ends.push_back(end);
    rest = compose(segment(n, i, end).inverse(), rest);
  }
  if (!rest.is_identity()) fail(ErrorCode::Internal, "kempf factorization failed for [" + w.oneline() + "]");
  return f;
}

Permutation from_kempf_factorization(int rank, const KempfFactorization& f) {
  if (static_cast<int>(f.ends.size()) != rank) fail(ErrorCode::InvalidArgument, "segment data has wrong length");
  auto w = Permutation::identity(rank);
  for (int i = 1; i <= rank; ++i) {
    int end = f.ends[static_cast<std::size_t>(i - 1)];
    if (end < i - 1 || end > rank) fail(ErrorCode::InvalidArgument, "invalid segment end");
    w = compose(w, segment(rank, i, end));
  }
  return w;
}

bool is_kempf(const Permutation& w) {
  const auto f = kempf_factorization(w);
  const int n = w.rank();
  for (int i = 1; i <= n - 1; ++i) {
    if (f.segment_is_full(i + 1, n)) continue;
    if (f.segment_length(i) > f.segment_length(i + 1) + 1) return false;
  }
  return true;
}

RootSubset kempf_complement(int rank, const std::vector<int>& ends) {
  check_rank(rank);
  if (static_cast<int>(ends.size()) != rank) fail(ErrorCode::InvalidArgument, "segment data has wrong length");
  for (int i = 1; i <= rank; ++i) {
    int e = ends[static_cast<std::size_t>(i - 1)];
    if (e < i - 1 || e > rank) fail(ErrorCode::InvalidArgument, "invalid segment end for s" + std::to_string(i));
    if (e < i) fail(ErrorCode::Contract, "kempf_complement needs nonempty segments (s" + std::to_string(i) + " is empty)");
  }
  auto end_at = [&](int i) { return i == rank + 1 ? rank : ends[static_cast<std::size_t>(i - 1)]; };
  RootSubset s(rank);
  for (int i = 1; i <= rank; ++i) {
    int height = end_at(i + 1) - end_at(i);
    for (int k = 1; k <= i; ++k)
      for (int j = 0; j < height; ++j)
        if (i + j <= rank) s.insert(PosRoot{k, i + j});
  }
  return s;
}

bool is_left_descent(const Permutation& w, int i) {
  const auto inv = w.inverse();
  return inv(i) > inv(i + 1);
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation cur = w;
  while (!cur.is_identity()) {
    for (int i = 1; i <= cur.rank(); ++i) {
      if (is_left_descent(cur, i)) {
        word.push_back(i);
        cur = compose(Permutation::simple(cur.rank(), i), cur);
        break;
      }
    }
  }
  return word;
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "id";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << "s" << word[k];
  return os.str();
}

}  // namespace fflv
