#include <doctest/doctest.h>

#include <stdexcept>

#include "gkmhess/gkm.hpp"

using namespace gkmhess;

namespace {

GkmElement sample_element(int n) {
  const VarSet tv = t_vars(n);
  GkmElement f(n);
  int k = 0;
  for (const auto& v : all_permutations(n)) {
    Polynomial p(tv);
    // Varied values: k-th vertex gets k * t_1 + t_{(k mod n) + 1}^2.
    p += Rational(k) * Polynomial::t(tv, 1);
    p += Polynomial::t(tv, (k % n) + 1) * Polynomial::t(tv, (k % n) + 1);
    f.set(v, p);
    ++k;
  }
  return f;
}

}  // namespace

TEST_CASE("phi substitutes x_i by t at the vertex image") {
  const VarSet xv = tx_vars(2);
  const GkmElement px1 = phi(Polynomial::x(xv, 1));
  const VarSet tv = t_vars(2);
  CHECK(px1.at(Permutation::parse("[1,2]")) == Polynomial::t(tv, 1));
  CHECK(px1.at(Permutation::parse("[2,1]")) == Polynomial::t(tv, 2));
  const GkmElement pt2 = phi(Polynomial::t(xv, 2));
  CHECK(pt2.at(Permutation::parse("[1,2]")) == Polynomial::t(tv, 2));
  CHECK(pt2.at(Permutation::parse("[2,1]")) == Polynomial::t(tv, 2));
}

TEST_CASE("phi is a ring map") {
  const VarSet xv = tx_vars(3);
  const Polynomial p = parse_polynomial(xv, "x1*x2 - t2");
  const Polynomial r = parse_polynomial(xv, "x3^2 + t1*x1");
  CHECK(phi(p + r) == phi(p) + phi(r));
  CHECK(phi(p * r) == phi(p) * phi(r));
  CHECK(phi_x_difference(3, 1, 3) ==
        phi(parse_polynomial(xv, "x1 - x3")));
}

TEST_CASE("dot and star are commuting left and right actions") {
  const GkmElement f = sample_element(3);
  const Permutation v = Permutation::parse("[2,3,1]");
  const Permutation w = Permutation::parse("[1,3,2]");
  CHECK(star(star(f, v), w) == star(f, v * w));
  CHECK(dot(v, dot(w, f)) == dot(v * w, f));
  CHECK(dot(v, star(f, w)) == star(dot(v, f), w));
  CHECK(star(f, Permutation::identity(3)) == f);
  CHECK(dot(Permutation::identity(3), f) == f);
}

TEST_CASE("star translates vertices on the right") {
  const GkmElement f = sample_element(3);
  const Permutation w = Permutation::parse("[3,1,2]");
  const GkmElement g = star(f, w);
  for (const auto& v : all_permutations(3))
    CHECK(g.at(v) == f.at(v * w.inverse()));
}

TEST_CASE("dot permutes t-variables and translates on the left") {
  const GkmElement f = sample_element(3);
  const Permutation w = Permutation::parse("[2,3,1]");
  const GkmElement g = dot(w, f);
  for (const auto& v : all_permutations(3))
    CHECK(g.at(v) == permute_t_vars(f.at(w.inverse() * v), w));
}

TEST_CASE("phi intertwines the actions with variable permutation") {
  const VarSet xv = tx_vars(3);
  const Polynomial p = parse_polynomial(xv, "x1^2*x3 - t2*x2 + t3");
  const Permutation w = Permutation::parse("[3,1,2]");
  CHECK(star(phi(p), w) == phi(permute_x_vars(p, w)));
  CHECK(dot(w, phi(p)) == phi(permute_t_vars(p, w)));
}

TEST_CASE("condition membership by example") {
  const int n = 2;
  const VarSet tv = t_vars(n);
  GkmElement f(n);
  f.set(Permutation::parse("[2,1]"), Polynomial::t(tv, 2) - Polynomial::t(tv, 1));
  CHECK(satisfies_condition(f, Transposition(1, 2)));

  GkmElement g(n);
  g.set(Permutation::parse("[2,1]"), Polynomial::constant(tv, 1));
  CHECK_FALSE(satisfies_condition(g, Transposition(1, 2)));

  const ConditionSet C(n, {Transposition(1, 2)});
  CHECK(in_subring(f, C));
  CHECK_FALSE(in_subring(g, C));
  CHECK(in_subring(g, ConditionSet(n, {})));
}

TEST_CASE("phi image satisfies every condition") {
  const VarSet xv = tx_vars(3);
  const GkmElement f = phi(parse_polynomial(xv, "x1^2*x2 - t1*x3 + 2"));
  for (int i = 1; i <= 2; ++i)
    for (int k = i + 1; k <= 3; ++k) CHECK(satisfies_condition(f, Transposition(i, k)));
}

TEST_CASE("divided difference satisfies its defining relation vertexwise") {
  const VarSet xv = tx_vars(3);
  const VarSet tv = t_vars(3);
  const GkmElement f = phi(parse_polynomial(xv, "x1^3 - t3*x2^2 + x1*x2*x3"));
  for (int i = 1; i <= 2; ++i) {
    const auto df = divided_difference(i, f);
    REQUIRE(df.has_value());
    const Permutation si = Permutation::adjacent(3, i);
    for (const auto& v : all_permutations(3)) {
      const Polynomial divisor = Polynomial::t(tv, v(i)) - Polynomial::t(tv, v(i + 1));
      CHECK(f.at(v) - f.at(v * si) == divisor * df->at(v));
    }
    CHECK(star(*df, si) == *df);
  }
}

TEST_CASE("divided difference is undefined off the condition subring") {
  const int n = 2;
  GkmElement f(n);
  f.set(Permutation::parse("[1,2]"), Polynomial::constant(t_vars(n), 1));
  CHECK_FALSE(divided_difference(1, f).has_value());
  CHECK_THROWS_AS(divided_difference(2, f), std::invalid_argument);
}

TEST_CASE("coset indicator lies in its subring") {
  const ConditionSet C(3, {Transposition(1, 2)});
  const GkmElement ind = coset_indicator(C);
  const VarSet tv = t_vars(3);
  CHECK(ind.at(Permutation::parse("[1,2,3]")) == Polynomial::constant(tv, 1));
  CHECK(ind.at(Permutation::parse("[2,1,3]")) == Polynomial::constant(tv, 1));
  CHECK(ind.at(Permutation::parse("[3,1,2]")).is_zero());
  CHECK(in_subring(ind, C));
  CHECK_FALSE(in_subring(ind, ConditionSet(3, {Transposition(2, 3)})));
}

TEST_CASE("decompositions reject the wrong kind of condition set") {
  // {(1,2),(2,3)} is almost-stable at both indices, never stable.
  const ConditionSet C(3, {Transposition(1, 2), Transposition(2, 3)});
  CHECK_THROWS_AS(stable_decompose(GkmElement::unit(3), 1, C), std::invalid_argument);
  // The full set is stable, not almost-stable.
  const ConditionSet full(3, {Transposition(1, 2), Transposition(1, 3), Transposition(2, 3)});
  CHECK_THROWS_AS(almost_stable_decompose(GkmElement::unit(3), 1, full),
                  std::invalid_argument);
  CHECK(almost_stable_multiplier(C, 1) == std::pair<int, int>(3, 2));
  CHECK(almost_stable_multiplier(C, 2) == std::pair<int, int>(2, 1));
}

TEST_CASE("json serialization round-trips and is canonical") {
  const GkmElement f = sample_element(3);
  const std::string dumped = to_json(f);
  const GkmElement back = gkm_element_from_json(dumped);
  CHECK(back == f);
  CHECK(to_json(back) == dumped);
  CHECK_THROWS_AS(gkm_element_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(gkm_element_from_json("{\"n\": 2, \"values\": {}}"),
                  std::invalid_argument);
}
