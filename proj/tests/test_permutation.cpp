#include <doctest/doctest.h>

#include <stdexcept>

#include "gkmhess/permutation.hpp"

using namespace gkmhess;

namespace {

// Subword criterion: v <= w iff some subsequence of a reduced word of w
// multiplies to v.  Independent of the rank-count test used by bruhat_leq.
bool bruhat_by_subwords(const Permutation& v, const Permutation& w) {
  const auto word = reduced_word(w);
  const int n = w.n();
  const int len = static_cast<int>(word.size());
  for (int mask = 0; mask < (1 << len); ++mask) {
    Permutation prod = Permutation::identity(n);
    for (int a = 0; a < len; ++a)
      if (mask & (1 << a)) prod = prod * Permutation::adjacent(n, word[a]);
    if (prod == v) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  const Permutation v = Permutation::parse("[2,3,1]");
  const Permutation w = Permutation::parse("[1,3,2]");
  const Permutation vw = v * w;
  for (int i = 1; i <= 3; ++i) CHECK(vw(i) == v(w(i)));
  CHECK(vw == Permutation::parse("[2,1,3]"));
}

TEST_CASE("right multiplication by s_i swaps one-line positions") {
  const Permutation w = Permutation::parse("[3,1,4,2]");
  const Permutation ws2 = w * Permutation::adjacent(4, 2);
  CHECK(ws2 == Permutation::parse("[3,4,1,2]"));
}

TEST_CASE("inverse and identity") {
  for (const auto& w : all_permutations(4)) {
    CHECK(w * w.inverse() == Permutation::identity(4));
    CHECK(w.inverse() * w == Permutation::identity(4));
  }
}

TEST_CASE("all_permutations is lexicographic and complete") {
  const auto s3 = all_permutations(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == Permutation::identity(3));
  CHECK(s3.back() == Permutation::longest(3));
  for (size_t k = 0; k + 1 < s3.size(); ++k) CHECK(s3[k].word() < s3[k + 1].word());
  CHECK(all_permutations(5).size() == 120);
}

TEST_CASE("reduced words are reduced and reconstruct the permutation") {
  for (const auto& w : all_permutations(4)) {
    const auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == w.length());
    Permutation prod = Permutation::identity(4);
    for (int letter : word) prod = prod * Permutation::adjacent(4, letter);
    CHECK(prod == w);
  }
}

TEST_CASE("bruhat order agrees with the subword criterion") {
  for (int n : {2, 3, 4})
    for (const auto& v : all_permutations(n))
      for (const auto& w : all_permutations(n))
        CHECK(bruhat_leq(v, w) == bruhat_by_subwords(v, w));
}

TEST_CASE("bruhat order basics") {
  CHECK(bruhat_leq(Permutation::identity(3), Permutation::longest(3)));
  CHECK_FALSE(bruhat_leq(Permutation::longest(3), Permutation::identity(3)));
  // [2,1,3] and [1,3,2] are incomparable.
  CHECK_FALSE(bruhat_leq(Permutation::parse("[2,1,3]"), Permutation::parse("[1,3,2]")));
  CHECK_FALSE(bruhat_leq(Permutation::parse("[1,3,2]"), Permutation::parse("[2,1,3]")));
}

TEST_CASE("transposition conjugation by adjacent transpositions") {
  CHECK(conjugate_by_adjacent(Transposition(2, 3), 1) == Transposition(1, 3));
  CHECK(conjugate_by_adjacent(Transposition(1, 3), 1) == Transposition(2, 3));
  CHECK(conjugate_by_adjacent(Transposition(1, 2), 1) == Transposition(1, 2));
  CHECK(conjugate_by_adjacent(Transposition(3, 4), 1) == Transposition(3, 4));
  CHECK(to_permutation(Transposition(1, 3), 3) == Permutation::parse("[3,2,1]"));
}

TEST_CASE("subgroups generated by transpositions") {
  const auto pair = subgroup_generated({Transposition(1, 2)}, 3);
  REQUIRE(pair.size() == 2);
  CHECK(pair[0] == Permutation::identity(3));
  CHECK(pair[1] == Permutation::parse("[2,1,3]"));

  const auto klein = subgroup_generated({Transposition(1, 2), Transposition(3, 4)}, 4);
  CHECK(klein.size() == 4);

  const auto s3 = subgroup_generated({Transposition(1, 2), Transposition(2, 3)}, 3);
  CHECK(s3.size() == 6);

  CHECK(subgroup_generated({}, 3).size() == 1);
}

TEST_CASE("coset representatives are lex-least and cover the group") {
  const std::vector<Transposition> gens = {Transposition(1, 2)};
  const auto reps = coset_representatives(gens, 3);
  REQUIRE(reps.size() == 3);
  const auto sub = subgroup_generated(gens, 3);
  // Each group element w factors as rep * member for exactly one rep.
  for (const auto& w : all_permutations(3)) {
    int hits = 0;
    for (const auto& rep : reps)
      for (const auto& m : sub)
        if (rep * m == w) ++hits;
    CHECK(hits == 1);
  }
  for (const auto& rep : reps)
    for (const auto& m : sub) CHECK_FALSE((rep * m).word() < rep.word());
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Permutation::parse("[1,1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("[0,1]"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("[1,2,x]"), std::invalid_argument);
  CHECK(Permutation::parse(" [ 2 , 1 ] ") == Permutation::parse("[2,1]"));
}
