#include <doctest/doctest.h>

#include <vector>

#include "gkmhess/csf.hpp"
#include "gkmhess/flowup.hpp"

using namespace gkmhess;

namespace {

// Proper colorings of the indifference graph, counted by brute force over
// all m^n maps; independent of the polynomial machinery.
long long proper_coloring_count(const HessenbergFunction& h, int m) {
  const IndifferenceGraph graph = indifference_graph(h);
  const int n = graph.n;
  std::vector<int> color(n, 1);
  long long count = 0;
  while (true) {
    bool proper = true;
    for (const auto& [a, b] : graph.edges)
      if (color[a - 1] == color[b - 1]) proper = false;
    if (proper) ++count;
    int pos = n - 1;
    while (pos >= 0 && color[pos] == m) color[pos--] = 1;
    if (pos < 0) break;
    ++color[pos];
  }
  return count;
}

Rational coefficient_sum(const Polynomial& p) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) total += c;
  return total;
}

}  // namespace

TEST_CASE("indifference graph edges") {
  const IndifferenceGraph path = indifference_graph(HessenbergFunction::parse("[2,3,3]"));
  CHECK(path.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  const IndifferenceGraph none = indifference_graph(HessenbergFunction::parse("[1,2,3]"));
  CHECK(none.edges.empty());
  const IndifferenceGraph triangle = indifference_graph(HessenbergFunction::full(3));
  CHECK(triangle.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("one edge, two colors") {
  const VarSet vs = color_vars(2, 2);
  const Polynomial expected = (Polynomial::constant(vs, 1) + Polynomial::q(vs)) *
                              (Polynomial::x(vs, 1) * Polynomial::x(vs, 2));
  CHECK(csf_truncated(HessenbergFunction::parse("[2,2]"), 2) == expected);
}

TEST_CASE("edgeless graph gives a power of the color sum") {
  const VarSet vs = color_vars(3, 2);
  const Polynomial sum = Polynomial::x(vs, 1) + Polynomial::x(vs, 2);
  CHECK(csf_truncated(HessenbergFunction::parse("[1,2,3]"), 2) == sum * sum * sum);
}

TEST_CASE("triangle with three colors") {
  const VarSet vs = color_vars(3, 3);
  const Polynomial q = Polynomial::q(vs);
  const Polynomial factor =
      Polynomial::constant(vs, 1) + Rational(2) * q + Rational(2) * q * q + q * q * q;
  CHECK(csf_truncated(HessenbergFunction::full(3), 3) ==
        factor * (Polynomial::x(vs, 1) * Polynomial::x(vs, 2) * Polynomial::x(vs, 3)));
}

TEST_CASE("setting q and x to one counts proper colorings") {
  for (const char* htext : {"[1,2,3]", "[2,2,3]", "[2,3,3]", "[3,3,3]"}) {
    const HessenbergFunction h = HessenbergFunction::parse(htext);
    for (int m : {2, 3}) {
      CHECK(coefficient_sum(csf_truncated(h, m)) ==
            Rational(static_cast<long>(proper_coloring_count(h, m))));
    }
  }
  // Triangle, three colors: 3! orderings.
  CHECK(proper_coloring_count(HessenbergFunction::full(3), 3) == 6);
}

TEST_CASE("truncated csf is symmetric in the color variables") {
  for (const char* htext : {"[2,2,3]", "[2,3,3]"}) {
    const Polynomial c = csf_truncated(HessenbergFunction::parse(htext), 3);
    for (int j = 1; j <= 2; ++j)
      CHECK(permute_x_vars(c, Permutation::adjacent(3, j)) == c);
  }
}

TEST_CASE("modular triples at small ranks") {
  CHECK(modular_triples(2).empty());
  const auto triples = modular_triples(3);
  REQUIRE(triples.size() == 2);
  CHECK(triples[0].h_minus.to_string() == "[2,2,3]");
  CHECK(triples[0].h.to_string() == "[2,3,3]");
  CHECK(triples[0].h_plus.to_string() == "[3,3,3]");
  CHECK(triples[0].i == 1);
  CHECK(triples[0].tau == Transposition(2, 3));
  CHECK(triples[1].h_minus.to_string() == "[1,3,3]");
  CHECK(triples[1].h.to_string() == "[2,3,3]");
  CHECK(triples[1].h_plus.to_string() == "[3,3,3]");
  CHECK(triples[1].i == 2);
  CHECK(triples[1].tau == Transposition(1, 2));
}

TEST_CASE("modular relation holds at rank 3, with extra colors too") {
  for (const auto& triple : modular_triples(3)) {
    CHECK(modular_relation_defect(triple, 3).is_zero());
    CHECK(modular_relation_defect(triple, 4).is_zero());
    CHECK(verify_modular_relation(triple, 3).passed());
  }
}

TEST_CASE("squarefree coefficient equals the poincare series on full flags") {
  for (int n : {2, 3}) {
    const HessenbergFunction full = HessenbergFunction::full(n);
    CHECK(squarefree_coefficient(full, n) == poincare_series(full));
    CHECK(csf_poincare_consistency(full).passed());
  }
  CHECK(squarefree_coefficient(HessenbergFunction::parse("[2,3,3]"), 3) ==
        QPolynomial({1, 4, 1}));
}
