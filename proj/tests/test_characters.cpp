#include "doctest.h"
#include "fflv/characters.hpp"
#include "fflv/error.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace fflv;

using oracle::Poly;
using oracle::pi_word;

namespace {

Poly demazure_oracle(const DominantWeight& l, const std::vector<int>& word) { return oracle::demazure(l, word); }

}  // namespace

TEST_CASE("partitions and monomials") {
  CHECK(to_partition(DominantWeight::parse("1,0,2")) == Exponent{3, 2, 2, 0});
  CHECK(to_partition(DominantWeight::zero(2)) == Exponent{0, 0, 0});
  const auto x1 = Character::monomial(1, {1, 0});
  const auto d = demazure_operator(1, x1);
  CHECK(d.terms() == std::map<Exponent, std::int64_t>{{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(demazure_operator(1, Character::monomial(1, {0, 1})).terms().empty());
  CHECK(act(Permutation::parse_oneline("2 3 1"), {5, 3, 1}) == Exponent{1, 5, 3});
  CHECK(d.mass() == 2);
  CHECK(d.all_positive());
  CHECK(d.to_text() == "x1 + x2");
  const auto j = nlohmann::json::parse(d.to_json());
  CHECK(j["[1,0]"] == 1);
  CHECK(Character(2).to_text() == "0");
}

TEST_CASE("Demazure operator matches the closed monomial formula") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& l : {DominantWeight::rho(n), DominantWeight::fundamental(n, 1), DominantWeight::rho(n).scaled(2)}) {
        const auto word = reduced_word(w);
        CHECK(demazure_character_oracle(w, l).terms() == demazure_oracle(l, word));
      }
  // a non-dominant input with negative output
  Character f = Character::monomial(2, {0, 3, 1});
  CHECK(demazure_operator(1, f).terms() == pi_word({1}, Poly{{{0, 3, 1}, 1}}));
}

TEST_CASE("w_0 gives the Schur polynomial") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : {DominantWeight::rho(n), DominantWeight::fundamental(n, 1), DominantWeight::fundamental(n, n)}) {
      CHECK(demazure_character_oracle(Permutation::longest(n), l).terms() == oracle::schur(l));
      CHECK(static_cast<std::uint64_t>(demazure_character_oracle(Permutation::longest(n), l).mass()) == oracle::weyl_dim(l));
    }
}

TEST_CASE("Demazure characters do not depend on the reduced word") {
  int checked = 0;
  for (const auto& w : all_permutations(4)) {
    if (w.length() < 3) continue;
    // alternative reduced word: greedy largest left descent
    std::vector<int> word;
    Permutation cur = w;
    while (!cur.is_identity())
      for (int i = 4; i >= 1; --i)
        if (is_left_descent(cur, i)) {
          word.push_back(i);
          cur = compose(Permutation::simple(4, i), cur);
          break;
        }
    if (word == reduced_word(w)) continue;
    const auto l = DominantWeight::rho(4);
    CHECK(demazure_character_along(word, l) == demazure_character_oracle(w, l));
    if (++checked == 10) break;
  }
  CHECK(checked == 10);
}

TEST_CASE("lattice-point characters equal Demazure characters for triangular w") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : all_permutations(n)) {
      if (!is_triangular_element(w)) continue;
      const auto a = inversion_roots(w);
      for (const auto& l : {DominantWeight::rho(n), DominantWeight::fundamental(n, 1), DominantWeight::zero(n)}) {
        const auto got = character_from_lattice_points(a, l, w);
        CHECK(got.terms() == demazure_oracle(l, reduced_word(w)));
      }
    }
  const auto w = Permutation::parse_word(3, "s2 s3 s1");
  CHECK(character_from_lattice_points(inversion_roots(w), DominantWeight::rho(3), w).mass() == 12);
}

TEST_CASE("contract violations") {
  const auto w = Permutation::parse_word(3, "s1 s3 s2");
  CHECK_THROWS_AS(character_from_lattice_points(inversion_roots(w), DominantWeight::rho(3), w), Error);
  const auto t = Permutation::parse_word(3, "s2 s3 s1");
  CHECK_THROWS_AS(character_from_lattice_points(RootSubset::full(3), DominantWeight::rho(3), t), Error);
  try {
    character_from_lattice_points(inversion_roots(w), DominantWeight::rho(3), w);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Contract);
  }
}

TEST_CASE("Weyl dimension") {
  CHECK(weyl_dimension(DominantWeight::rho(2)) == 8);
  CHECK(weyl_dimension(DominantWeight::rho(3)) == 64);
  CHECK(weyl_dimension(DominantWeight::fundamental(4, 2)) == 10);
  CHECK(weyl_dimension(DominantWeight::zero(5)) == 1);
  for (int n = 1; n <= 5; ++n) CHECK(weyl_dimension(DominantWeight::rho(n)) == oracle::weyl_dim(DominantWeight::rho(n)));
}
