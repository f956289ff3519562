#include <doctest/doctest.h>

#include "gkmhess/flowup.hpp"
#include "gkmhess/gkm.hpp"
#include "gkmhess/schubert.hpp"

using namespace gkmhess;

TEST_CASE("polynomial divided difference basics") {
  const VarSet xv = tx_vars(3);
  CHECK(poly_divided_difference(1, parse_polynomial(xv, "x1")) ==
        Polynomial::constant(xv, 1));
  CHECK(poly_divided_difference(1, parse_polynomial(xv, "x2")) ==
        Polynomial::constant(xv, -1));
  CHECK(poly_divided_difference(1, parse_polynomial(xv, "x3 + t1")).is_zero());
  // Symmetric in x1, x2: annihilated.
  CHECK(poly_divided_difference(1, parse_polynomial(xv, "x1*x2 + x1 + x2")).is_zero());
  CHECK(poly_divided_difference(1, parse_polynomial(xv, "x1^2")) ==
        parse_polynomial(xv, "x1 + x2"));
}

TEST_CASE("single table at rank 3 has the classical entries") {
  const SchubertTable table = schubert_table(3);
  REQUIRE(table.entries.size() == 6);
  const VarSet xv = tx_vars(3);
  CHECK(table.entries.at(Permutation::parse("[1,2,3]")) == parse_polynomial(xv, "1"));
  CHECK(table.entries.at(Permutation::parse("[2,1,3]")) == parse_polynomial(xv, "x1"));
  CHECK(table.entries.at(Permutation::parse("[1,3,2]")) == parse_polynomial(xv, "x1 + x2"));
  CHECK(table.entries.at(Permutation::parse("[2,3,1]")) == parse_polynomial(xv, "x1*x2"));
  CHECK(table.entries.at(Permutation::parse("[3,1,2]")) == parse_polynomial(xv, "x1^2"));
  CHECK(table.entries.at(Permutation::parse("[3,2,1]")) == parse_polynomial(xv, "x1^2*x2"));
}

TEST_CASE("single entries use no t-variables; doubles specialize to singles") {
  for (int n : {2, 3, 4}) {
    const SchubertTable single = schubert_table(n);
    const SchubertTable dbl = double_schubert_table(n);
    REQUIRE(single.entries.size() == dbl.entries.size());
    for (const auto& [w, p] : single.entries) {
      CHECK(set_t_zero(p) == p);
      CHECK(set_t_zero(dbl.entries.at(w)) == p);
      CHECK(p.is_homogeneous(w.length()));
      CHECK(dbl.entries.at(w).is_homogeneous(w.length()));
    }
  }
}

TEST_CASE("double top entries are the staircase products") {
  const VarSet x2 = tx_vars(2);
  CHECK(double_schubert_table(2).entries.at(Permutation::longest(2)) ==
        parse_polynomial(x2, "x1 - t1"));
  const VarSet x3 = tx_vars(3);
  const Polynomial expected = (Polynomial::x(x3, 1) - Polynomial::t(x3, 1)) *
                              (Polynomial::x(x3, 1) - Polynomial::t(x3, 2)) *
                              (Polynomial::x(x3, 2) - Polynomial::t(x3, 1));
  CHECK(double_schubert_table(3).entries.at(Permutation::longest(3)) == expected);
}

TEST_CASE("double entries have flow-up support and diagonal") {
  for (int n : {2, 3}) CHECK(double_schubert_flow_up_check(n).passed());
}

TEST_CASE("phi images of the double table equal the full-flag flow-up basis") {
  const int n = 3;
  const SchubertTable dbl = double_schubert_table(n);
  const FlowUpBasis basis = flow_up_basis(HessenbergFunction::full(n));
  for (const auto& [w, p] : dbl.entries) CHECK(phi(p) == basis.elements.at(w));
}
