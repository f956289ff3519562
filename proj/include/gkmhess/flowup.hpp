// Flow-up bases of the condition subrings H_{C(h)}: one element per
// permutation, supported on the Bruhat up-set, with a prescribed product of
// linear forms on the diagonal.  Construction is a vertexwise linear solve
// over exact rationals.
#pragma once

#include <map>
#include <vector>

#include "gkmhess/gkm.hpp"
#include "gkmhess/hessenberg.hpp"
#include "gkmhess/qpoly.hpp"
#include "gkmhess/report.hpp"

namespace gkmhess {

// prod of (t_{w(i)} - t_{w(k)}) over (i,k) in C(h) with w(i) > w(k); the
// empty product is 1.  Every factor reads larger index minus smaller.
Polynomial prescribed_diagonal(const HessenbergFunction& h, const Permutation& w);

struct FlowUpBasis {
  HessenbergFunction h;
  // Permutations in (length, lexicographic) order; the construction order.
  std::vector<Permutation> order;
  std::map<Permutation, GkmElement> elements;
  // degrees[w] = #{(i,k) in C(h) : w(i) > w(k)}, the homogeneous degree of
  // every vertex value of elements[w].
  std::map<Permutation, int> degrees;
};

// For each w: f_w(v) = 0 unless w <= v in Bruhat order, f_w(w) is the
// prescribed diagonal, and every condition of C(h) holds.  The linear
// system for the vertex values above w is solved in reduced row echelon
// form with unknowns ordered vertex-major then graded-lex, free variables
// pinned to zero, so the output is deterministic.
FlowUpBasis flow_up_basis(const HessenbergFunction& h);

// Graded dimension series sum_w q^{degrees[w]}.  Computed from the degree
// statistic directly; matches the constructed basis degrees.
QPolynomial poincare_series(const HessenbergFunction& h);

// Checks that (C(h_minus), C(h), C(h_plus)) is the condition-set triple of
// an almost-s_i-stable C(h), that 1 + q divides the Poincare series of both
// h_plus and h_minus, and that
//   Poin(h) = Poin(h_plus)/(1+q) + q * Poin(h_minus)/(1+q).
RunReport verify_graded_modular(const HessenbergFunction& h_minus,
                                const HessenbergFunction& h,
                                const HessenbergFunction& h_plus, int i);

// Verifies the frozen n=3 basis tables for all five Hessenberg functions:
// subring membership, Bruhat triangularity, homogeneity, exact diagonals,
// every recorded divided-difference arrow between table elements, and
// agreement of the constructed basis with the tables (degrees and diagonals
// everywhere; exact equality for h = [3,3,3], where the basis is unique).
RunReport check_appendix_fixtures();

}  // namespace gkmhess
