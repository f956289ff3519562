// Chromatic quasisymmetric functions of incomparability graphs of natural
// unit interval orders (truncated to finitely many color variables), and the
// modular-relation triples coming from almost-stable condition sets.
#pragma once

#include <vector>

#include "gkmhess/hessenberg.hpp"
#include "gkmhess/polynomial.hpp"
#include "gkmhess/qpoly.hpp"
#include "gkmhess/report.hpp"

namespace gkmhess {

// Vertices 1..n; edges {i, k} with i < k <= h(i), i != k.
struct IndifferenceGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

IndifferenceGraph indifference_graph(const HessenbergFunction& h);

// Sum over proper colorings kappa: {1..n} -> {1..m} of
// q^{asc(kappa)} x_{kappa(1)} .. x_{kappa(n)}, where asc counts edges (i,k)
// with i < k and kappa(i) < kappa(k).  Lives in color_vars(n, m).
Polynomial csf_truncated(const HessenbergFunction& h, int m);

// A triple h_minus < h < h_plus with C(h_minus) = C(h) - {tau} and
// C(h_plus) = C(h) + {s_i tau s_i}, produced by an almost-s_i-stable C(h)
// whose modified condition sets are again Hessenberg-shaped.
struct ModularTriple {
  HessenbergFunction h_minus;
  HessenbergFunction h;
  HessenbergFunction h_plus;
  int i = 0;
  Transposition tau;
};

// All modular triples at rank n, ordered by (h, i).
std::vector<ModularTriple> modular_triples(int n);

// Left side (1+q) csf(h) minus right side csf(h_plus) + q csf(h_minus),
// with m color variables; zero exactly when the modular relation holds.
Polynomial modular_relation_defect(const ModularTriple& triple, int m);

// Coefficient of the squarefree monomial x1 x2 .. xn in csf_truncated(h, m)
// as a polynomial in q (requires m >= n).
QPolynomial squarefree_coefficient(const HessenbergFunction& h, int m);

// Asserts (1+q) csf(h) = csf(h_plus) + q csf(h_minus) on m color variables
// (m >= n for a faithful check); a failure reports a differing monomial.
RunReport verify_modular_relation(const ModularTriple& triple, int m);

// For h = [n,..,n] the squarefree coefficient of csf equals the Poincare
// series of the flow-up basis; checked exactly.
RunReport csf_poincare_consistency(const HessenbergFunction& h);

}  // namespace gkmhess
