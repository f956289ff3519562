// Exact sparse multivariate polynomials over the rationals.
//
// The ambient variable set is explicit: t1..t_{t_count}, then x-variables
// x1..x_{x_count + x_extra}, then optionally the single variable q.  Two
// polynomials combine only when their variable sets agree exactly.
// Coefficients are GMP rationals, so all arithmetic is exact.
//
// Terms are kept in canonical graded-lex descending order (total degree
// first, then lexicographically with t1 most significant).  Printing and
// parsing round-trip through the canonical text form, e.g.
// "2*t1^2*t2 - 1/2*t3".
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkmhess/permutation.hpp"

namespace gkmhess {

using Rational = mpq_class;

struct VarSet {
  int t_count = 0;
  int x_count = 0;
  int x_extra = 0;
  bool has_q = false;

  int total_x() const { return x_count + x_extra; }
  int total_vars() const { return t_count + total_x() + (has_q ? 1 : 0); }
  friend bool operator==(const VarSet&, const VarSet&) = default;
};

// Coefficient ring Q[t1..tn].
VarSet t_vars(int n);
// Ambient polynomial ring Q[t1..tn, x1..xn].
VarSet tx_vars(int n);
// Coloring ring Q[x1..xm, q] for an n-vertex graph (extra color variables
// beyond the first n are tracked separately).
VarSet color_vars(int n, int m);

// Name of the variable at a raw index (t's first, then x's, then q).
std::string var_name(const VarSet& vs, int index);

// Exponent vector; size always equals VarSet::total_vars().
using Monomial = std::vector<int>;

// Graded-lex descending: higher total degree first, ties broken
// lexicographically with earlier variables more significant.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit Polynomial(VarSet vs);

  static Polynomial zero(VarSet vs) { return Polynomial(vs); }
  static Polynomial constant(VarSet vs, Rational c);
  static Polynomial variable(VarSet vs, int index);
  // t_i, 1-based.
  static Polynomial t(VarSet vs, int i);
  // x_i, 1-based.
  static Polynomial x(VarSet vs, int i);
  static Polynomial q(VarSet vs);

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of a monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  // nullopt for the zero polynomial (its degree is "minus infinity").
  std::optional<int> total_degree() const;
  bool is_homogeneous(int d) const;
  Polynomial homogeneous_component(int d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Rational& c, const Polynomial& f);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

  std::string to_string() const;

private:
  VarSet vars_;
  TermMap terms_;
};

// Quotient f/g when it is exact, nullopt when no polynomial quotient exists.
// Multivariate long division in graded-lex order; for a single divisor a
// nonzero remainder certifies non-divisibility.  Throws on zero divisor or
// variable-set mismatch.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

// Substitution t_i -> t_{w(i)}; w must lie in S_{t_count}.  Satisfies the
// left-action law permute_t_vars(permute_t_vars(f, v), w) =
// permute_t_vars(f, w*v).
Polynomial permute_t_vars(const Polynomial& f, const Permutation& w);

// Substitution x_i -> x_{w^{-1}(i)}; w must lie in S_{total_x}.  Satisfies
// the right-action law permute_x_vars(permute_x_vars(f, v), w) =
// permute_x_vars(f, v*w).
Polynomial permute_x_vars(const Polynomial& f, const Permutation& w);

// All t-variables set to zero (terms with positive t-degree dropped).
Polynomial set_t_zero(const Polynomial& f);

// Parse the canonical text form (or a whitespace-relaxed variant of it).
// Throws std::invalid_argument on syntax errors or out-of-range variables.
Polynomial parse_polynomial(const VarSet& vs, const std::string& text);

std::string to_string(const Rational& c);

}  // namespace gkmhess
