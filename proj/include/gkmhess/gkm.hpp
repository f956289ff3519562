// Elements of the vertexwise function ring H = Fun(S_n, Q[t1..tn]) in its
// moment-graph presentation, the two commuting S_n-actions, divided
// difference operators, transposition divisibility conditions, and the
// direct-sum decompositions for stable and almost-stable condition sets.
//
// Conventions.  The dot action permutes t-variables and acts on vertices on
// the left: (dot(w, f))(v) = permute_t_vars(f(w^{-1} v), w).  The star
// action is vertex translation on the right: (star(f, w))(v) = f(v w^{-1});
// it restricts to permute_x_vars through phi.  The divided difference at i
// divides f(v) - f(v s_i) by t_{v(i)} - t_{v(i+1)} at every vertex, and is
// defined exactly when every vertexwise quotient is exact.
#pragma once

#include <map>
#include <optional>
#include <utility>

#include "gkmhess/hessenberg.hpp"
#include "gkmhess/polynomial.hpp"

namespace gkmhess {

class GkmElement {
public:
  explicit GkmElement(int n);

  static GkmElement zero(int n) { return GkmElement(n); }
  static GkmElement constant(int n, const Rational& c);
  static GkmElement unit(int n) { return constant(n, 1); }

  int n() const { return n_; }
  const Polynomial& at(const Permutation& v) const;
  // Value polynomial must live in t_vars(n).
  void set(const Permutation& v, Polynomial p);
  const std::map<Permutation, Polynomial>& values() const { return values_; }
  bool is_zero() const;

  GkmElement operator-() const;
  GkmElement& operator+=(const GkmElement& g);
  GkmElement& operator-=(const GkmElement& g);
  friend GkmElement operator+(GkmElement f, const GkmElement& g) { return f += g; }
  friend GkmElement operator-(GkmElement f, const GkmElement& g) { return f -= g; }
  // Vertexwise product.
  friend GkmElement operator*(const GkmElement& f, const GkmElement& g);
  friend GkmElement operator*(const Rational& c, const GkmElement& f);
  // Scalar multiplication by a polynomial in the t-variables alone.
  friend GkmElement operator*(const Polynomial& c, const GkmElement& f);
  friend bool operator==(const GkmElement& f, const GkmElement& g);

private:
  int n_;
  std::map<Permutation, Polynomial> values_;
};

// Ring map from Q[t1..tn, x1..xn]: at vertex v substitute x_i -> t_{v(i)};
// t-variables pass through.  Its kernel contains e_j(t) - e_j(x).
GkmElement phi(const Polynomial& p);

// phi applied to x_a - x_b (1-based), a convenience for the decompositions.
GkmElement phi_x_difference(int n, int a, int b);

// Left dot action; permutes t-variables.  dot(w, phi(p)) = phi applied to
// p with its t-variables permuted by w.
GkmElement dot(const Permutation& w, const GkmElement& f);

// Right star action; phi-image of permute_x_vars.  star(star(f, v), w) =
// star(f, v*w).
GkmElement star(const GkmElement& f, const Permutation& w);

// Whether f(v) - f(v tau) is divisible by t_{v(i)} - t_{v(k)} at every v.
bool satisfies_condition(const GkmElement& f, const Transposition& tau);

// Membership in H_C: every condition in C holds.
bool in_subring(const GkmElement& f, const ConditionSet& C);

// Divided difference at i: nullopt when some vertexwise quotient is not
// exact (f outside H_{s_i}).  The result is always star-s_i-invariant.
std::optional<GkmElement> divided_difference(int i, const GkmElement& f);

// For s_i-stable C and f in H_C, the unique pair (g, h) of
// star-s_i-invariant elements of H_C with f = g + phi(x_i - x_{i+1}) * h:
//   g = (f + star(f, s_i)) / 2,   h = divided_difference(i, f) / 2.
// Throws when C is not s_i-stable or the divided difference is undefined
// (which certifies f outside H_C).
std::pair<GkmElement, GkmElement> stable_decompose(const GkmElement& f, int i, const ConditionSet& C);

// For almost-s_i-stable C with witness tau and f in H_C, the pair (p, m)
// with p in H_{C+} and m in H_{C-}, both star-s_i-invariant, satisfying
// f = p + phi(x_a - x_b) * m where (a, b) = almost_stable_multiplier(C, i).
// When tau contains i (other endpoint k): p = divided_difference(i,
// phi(x_k - x_{i+1}) * f), m = divided_difference(i, f).  When tau contains
// i+1 the computation runs on star(f, s_i) and the sign of m flips.
std::pair<GkmElement, GkmElement> almost_stable_decompose(const GkmElement& f, int i, const ConditionSet& C);

// Endpoints (a, b) such that f = p + phi(x_a - x_b) * m reconstructs the
// almost-stable decomposition.
std::pair<int, int> almost_stable_multiplier(const ConditionSet& C, int i);

// C with the witness removed / with its s_i-conjugate added; both are
// s_i-stable when C is almost-s_i-stable.
ConditionSet almost_stable_lower(const ConditionSet& C, int i);
ConditionSet almost_stable_upper(const ConditionSet& C, int i);

// Indicator of the subgroup generated by C: 1 on members, 0 elsewhere.
GkmElement coset_indicator(const ConditionSet& C);

// Canonical JSON serialization: {"n": n, "values": {"[one-line]": "poly"}}
// with all n! vertex keys in lexicographic order.
std::string to_json(const GkmElement& f);
GkmElement gkm_element_from_json(const std::string& text);

}  // namespace gkmhess
