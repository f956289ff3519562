#include <doctest/doctest.h>

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "gkmhess/linalg.hpp"
#include "gkmhess/polynomial.hpp"

using namespace gkmhess;

namespace {

std::vector<Monomial> monomials_up_to(int nvars, int maxdeg) {
  std::vector<Monomial> out;
  Monomial current(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars) {
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      current[var] = e;
      rec(var + 1, left - e);
    }
    current[var] = 0;
  };
  rec(0, maxdeg);
  return out;
}

// Independent divisibility decision: q*d = f is a linear system in the
// coefficients of q.  Solvable iff d divides f; on success the solution
// rebuilt as a polynomial must match the long-division quotient.
std::optional<Polynomial> divide_by_linear_system(const Polynomial& f, const Polynomial& d) {
  const int fdeg = f.total_degree().value_or(0);
  const int ddeg = d.total_degree().value_or(0);
  const int qdeg = fdeg - ddeg;
  if (qdeg < 0) return std::nullopt;
  const int nvars = f.vars().total_vars();
  const auto qmons = monomials_up_to(nvars, qdeg);
  const auto fmons = monomials_up_to(nvars, fdeg);
  std::map<Monomial, int> qindex;
  for (size_t k = 0; k < qmons.size(); ++k) qindex[qmons[k]] = static_cast<int>(k);

  LinearSystem sys(static_cast<int>(qmons.size()));
  for (const auto& target : fmons) {
    std::map<int, Rational> row;
    for (const auto& [dm, dc] : d.terms()) {
      Monomial qm(nvars);
      bool fits = true;
      for (int v = 0; v < nvars; ++v) {
        qm[v] = target[v] - dm[v];
        if (qm[v] < 0) fits = false;
      }
      if (!fits) continue;
      const auto it = qindex.find(qm);
      if (it == qindex.end()) continue;
      row[it->second] += dc;
    }
    if (!sys.add_equation(std::move(row), f.coefficient(target))) return std::nullopt;
  }
  const auto sol = sys.solve();
  Polynomial q(f.vars());
  for (size_t k = 0; k < qmons.size(); ++k) q.add_term(qmons[k], sol[k]);
  if (!(q * d == f)) return std::nullopt;
  return q;
}

}  // namespace

TEST_CASE("terms are kept in graded-lex descending order") {
  const VarSet vs = t_vars(3);
  Polynomial p(vs);
  p.add_term({0, 0, 2}, 1);  // t3^2
  p.add_term({1, 1, 0}, 1);  // t1*t2
  p.add_term({0, 1, 0}, 5);  // t2
  REQUIRE(p.terms().size() == 3);
  auto it = p.terms().begin();
  CHECK(it->first == Monomial{1, 1, 0});
  ++it;
  CHECK(it->first == Monomial{0, 0, 2});
  ++it;
  CHECK(it->first == Monomial{0, 1, 0});
  CHECK(p.to_string() == "t1*t2 + t3^2 + 5*t2");
}

TEST_CASE("printing and parsing round-trip the canonical form") {
  const VarSet vs = t_vars(3);
  for (const char* text : {"2*t1^2*t2 - 1/2*t3", "0", "1", "-1", "t1 - t2",
                           "1/3*t1*t2*t3 + t3^2 - 7"}) {
    const Polynomial p = parse_polynomial(vs, text);
    CHECK(p.to_string() == text);
    CHECK(parse_polynomial(vs, p.to_string()) == p);
  }
  const VarSet xv = tx_vars(2);
  const Polynomial mixed = parse_polynomial(xv, "t1*x2 - x1^2");
  CHECK(mixed.to_string() == "t1*x2 - x1^2");
  CHECK(parse_polynomial(xv, "  t1 * x2-x1 ^2 ") == mixed);
}

TEST_CASE("parsing rejects malformed input") {
  const VarSet vs = t_vars(2);
  CHECK_THROWS_AS(parse_polynomial(vs, "t3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial(vs, "x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial(vs, "t1 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial(vs, "t1 t2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial(vs, "q"), std::invalid_argument);
}

TEST_CASE("ring identities") {
  const VarSet vs = t_vars(3);
  const Polynomial a = parse_polynomial(vs, "t1 + 2*t2 - t3");
  const Polynomial b = parse_polynomial(vs, "t1*t3 - 3");
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK(a - a == Polynomial::zero(vs));
  CHECK(Rational(1, 2) * (a + a) == a);
}

TEST_CASE("degree and homogeneous components") {
  const VarSet vs = t_vars(2);
  const Polynomial p = parse_polynomial(vs, "t1^3 + t1*t2 - 4*t2 + 1");
  CHECK(p.total_degree() == 3);
  CHECK_FALSE(Polynomial::zero(vs).total_degree().has_value());
  CHECK(p.is_homogeneous(3) == false);
  CHECK(parse_polynomial(vs, "t1*t2 + t2^2").is_homogeneous(2));
  Polynomial sum(vs);
  for (int d = 0; d <= 3; ++d) sum += p.homogeneous_component(d);
  CHECK(sum == p);
  CHECK(p.homogeneous_component(2) == parse_polynomial(vs, "t1*t2"));
}

TEST_CASE("exact division agrees with a linear-system oracle") {
  const VarSet vs = t_vars(3);
  const std::vector<const char*> dividends = {"t1 - t2", "t1 + t2 - 2*t3",
                                              "t1^2 - t2^2", "t3 + 1"};
  const std::vector<const char*> factors = {"t1 + t3", "2*t2 - 1", "t1*t2 - t3^2 + 1"};
  for (const char* dtext : dividends) {
    const Polynomial d = parse_polynomial(vs, dtext);
    for (const char* ptext : factors) {
      const Polynomial p = parse_polynomial(vs, ptext);
      const Polynomial f = p * d;

      const auto quotient = exact_divide(f, d);
      REQUIRE(quotient.has_value());
      CHECK(*quotient == p);
      const auto oracle = divide_by_linear_system(f, d);
      REQUIRE(oracle.has_value());
      CHECK(*oracle == p);

      // f + 1 is not divisible by any non-constant d.
      const Polynomial off = f + Polynomial::constant(vs, 1);
      CHECK_FALSE(exact_divide(off, d).has_value());
      CHECK_FALSE(divide_by_linear_system(off, d).has_value());
    }
  }
  CHECK_THROWS_AS(exact_divide(parse_polynomial(vs, "t1"), Polynomial::zero(vs)),
                  std::invalid_argument);
}

TEST_CASE("divisibility by a linear difference equals vanishing under substitution") {
  const VarSet vs = t_vars(3);
  const Polynomial d = parse_polynomial(vs, "t1 - t3");
  const Polynomial f = parse_polynomial(vs, "t1^2 - t3^2 + t2*t1 - t2*t3");
  CHECK(exact_divide(f, d).has_value());
  const Polynomial g = f + parse_polynomial(vs, "t2");
  CHECK_FALSE(exact_divide(g, d).has_value());
}

TEST_CASE("t-variable permutation is a left action") {
  const VarSet vs = t_vars(3);
  const Polynomial p = parse_polynomial(vs, "t1^2*t2 - t3");
  const Permutation v = Permutation::parse("[2,3,1]");
  const Permutation w = Permutation::parse("[2,1,3]");
  CHECK(permute_t_vars(permute_t_vars(p, v), w) == permute_t_vars(p, w * v));
  CHECK(permute_t_vars(p, Permutation::identity(3)) == p);
  // t1 -> t_{w(1)} explicitly.
  CHECK(permute_t_vars(parse_polynomial(vs, "t1"), v) == parse_polynomial(vs, "t2"));
}

TEST_CASE("x-variable permutation is a right action and fixes t") {
  const VarSet vs = tx_vars(3);
  const Polynomial p = parse_polynomial(vs, "x1^2*x3 + t1*x2");
  const Permutation v = Permutation::parse("[3,1,2]");
  const Permutation w = Permutation::parse("[1,3,2]");
  CHECK(permute_x_vars(permute_x_vars(p, v), w) == permute_x_vars(p, v * w));
  CHECK(permute_x_vars(parse_polynomial(vs, "t1 + t2"), v) == parse_polynomial(vs, "t1 + t2"));
}

TEST_CASE("setting t to zero") {
  const VarSet vs = tx_vars(2);
  const Polynomial p = parse_polynomial(vs, "x1^2 + t1*x2 - t2^2 + 3");
  CHECK(set_t_zero(p) == parse_polynomial(vs, "x1^2 + 3"));
}
