#include "gkmhess/flowup.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "gkmhess/linalg.hpp"

namespace gkmhess {

Polynomial prescribed_diagonal(const HessenbergFunction& h, const Permutation& w) {
  if (h.n() != w.n()) throw std::invalid_argument("prescribed_diagonal: rank mismatch");
  const VarSet vs = t_vars(h.n());
  const ConditionSet C = hessenberg_conditions(h);
  Polynomial out = Polynomial::constant(vs, 1);
  for (const auto& t : C.conditions())
    if (w(t.i) > w(t.k)) out = out * (Polynomial::t(vs, w(t.i)) - Polynomial::t(vs, w(t.k)));
  return out;
}

namespace {

int condition_inversions(const ConditionSet& C, const Permutation& w) {
  int d = 0;
  for (const auto& t : C.conditions())
    if (w(t.i) > w(t.k)) ++d;
  return d;
}

// All degree-d monomials in n variables, graded-lex descending.
std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  Monomial m(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      m[pos] = left;
      out.push_back(m);
      m[pos] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[pos] = e;
      self(self, pos + 1, left - e);
    }
    m[pos] = 0;
  };
  if (n > 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexGreater());
  return out;
}

// Exponent vector with t_a identified to t_b (1-based).
Monomial collapse(const Monomial& e, int a, int b) {
  Monomial m = e;
  m[b - 1] += m[a - 1];
  m[a - 1] = 0;
  return m;
}

}  // namespace

FlowUpBasis flow_up_basis(const HessenbergFunction& h) {
  const int n = h.n();
  const ConditionSet C = hessenberg_conditions(h);
  const VarSet vs = t_vars(n);

  FlowUpBasis basis{h, {}, {}, {}};
  basis.order = all_permutations(n);
  std::stable_sort(basis.order.begin(), basis.order.end(),
                   [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });

  std::vector<std::pair<Permutation, Permutation>> condition_pairs;  // (v, v*tau) with v lex-least
  std::vector<Transposition> pair_tau;
  for (const auto& tau : C.conditions()) {
    const Permutation tp = to_permutation(tau, n);
    for (const auto& v : all_permutations(n)) {
      const Permutation u = v * tp;
      if (v < u) {
        condition_pairs.emplace_back(v, u);
        pair_tau.push_back(tau);
      }
    }
  }

  for (const auto& w : basis.order) {
    const int d = condition_inversions(C, w);
    basis.degrees.emplace(w, d);
    const Polynomial diag = prescribed_diagonal(h, w);

    // Unknowns: coefficients of the degree-d vertex values strictly above w.
    std::vector<Permutation> above;
    for (const auto& v : basis.order)
      if (!(v == w) && bruhat_leq(w, v)) above.push_back(v);
    const std::vector<Monomial> monos = monomials_of_degree(n, d);
    std::map<Permutation, int> vertex_base;
    for (size_t a = 0; a < above.size(); ++a)
      vertex_base.emplace(above[a], static_cast<int>(a * monos.size()));
    std::map<Monomial, int, GrlexGreater> mono_index;
    for (size_t m = 0; m < monos.size(); ++m) mono_index.emplace(monos[m], static_cast<int>(m));

    LinearSystem system(static_cast<int>(above.size() * monos.size()));

    for (size_t pi = 0; pi < condition_pairs.size(); ++pi) {
      const auto& [v, u] = condition_pairs[pi];
      const Transposition& tau = pair_tau[pi];
      const int a = v(tau.i), b = v(tau.k);
      // Coefficientwise vanishing of (f(v) - f(u)) under t_a = t_b.
      std::map<Monomial, std::map<int, Rational>, GrlexGreater> lhs;
      std::map<Monomial, Rational, GrlexGreater> rhs;
      auto contribute = [&](const Permutation& vert, int sign) {
        if (vert == w) {
          for (const auto& [e, c] : diag.terms()) rhs[collapse(e, a, b)] -= sign * c;
        } else if (auto it = vertex_base.find(vert); it != vertex_base.end()) {
          for (const auto& [mono, idx] : mono_index) lhs[collapse(mono, a, b)][it->second + idx] += sign;
        }
      };
      contribute(v, +1);
      contribute(u, -1);
      for (auto& [cm, row] : lhs) {
        Rational r = 0;
        if (auto it = rhs.find(cm); it != rhs.end()) {
          r = it->second;
          rhs.erase(it);
        }
        if (!system.add_equation(std::move(row), r))
          throw std::logic_error("flow_up_basis: inconsistent system at " + w.to_string());
      }
      for (const auto& [cm, r] : rhs)
        if (sgn(r) != 0) throw std::logic_error("flow_up_basis: inconsistent system at " + w.to_string());
    }

    const std::vector<Rational> solution = system.solve();
    GkmElement f(n);
    f.set(w, diag);
    for (size_t ai = 0; ai < above.size(); ++ai) {
      Polynomial val(vs);
      for (size_t mi = 0; mi < monos.size(); ++mi)
        val.add_term(monos[mi], solution[ai * monos.size() + mi]);
      f.set(above[ai], std::move(val));
    }
    basis.elements.emplace(w, std::move(f));
  }
  return basis;
}

QPolynomial poincare_series(const HessenbergFunction& h) {
  const ConditionSet C = hessenberg_conditions(h);
  QPolynomial out;
  for (const auto& w : all_permutations(h.n())) out.add_term(condition_inversions(C, w), 1);
  return out;
}

RunReport verify_graded_modular(const HessenbergFunction& h_minus, const HessenbergFunction& h,
                                const HessenbergFunction& h_plus, int i) {
  RunReport report;
  report.command = "verify_graded_modular " + h_minus.to_string() + " " + h.to_string() + " " +
                   h_plus.to_string() + " i=" + std::to_string(i);
  const ConditionSet C = hessenberg_conditions(h);
  const auto witness = almost_stable_witness(C, i);
  const bool valid = witness.has_value() &&
                     hessenberg_conditions(h_minus) == C.without(*witness) &&
                     hessenberg_conditions(h_plus) == C.with(conjugate_by_adjacent(*witness, i));
  report.add("valid-triple", valid,
             valid ? "" : "condition sets do not form an almost-stable modular triple at i");
  if (!valid) return report;

  const QPolynomial mid = poincare_series(h);
  const auto plus = poincare_series(h_plus).divide_by_one_plus_q();
  const auto minus = poincare_series(h_minus).divide_by_one_plus_q();
  report.add("plus-divisible", plus.has_value(),
             plus ? "" : "1+q does not divide " + poincare_series(h_plus).to_string());
  report.add("minus-divisible", minus.has_value(),
             minus ? "" : "1+q does not divide " + poincare_series(h_minus).to_string());
  if (plus && minus) {
    const QPolynomial rhs = *plus + minus->shifted(1);
    report.add("graded-identity", mid == rhs,
               mid == rhs ? "" : mid.to_string() + " != " + rhs.to_string());
  }
  return report;
}

namespace {

// The fixture tables below list vertex values in the order
// id, s1, s2, s1s2, s2s1, w0.
const std::array<const char*, 6> kFixtureVertices = {"[1,2,3]", "[2,1,3]", "[1,3,2]",
                                                     "[2,3,1]", "[3,1,2]", "[3,2,1]"};

// Value codes: "" is zero, "1" is one, "ab" is t_a - t_b, '*' joins factors
// (so "21*32" is (t2 - t1)(t3 - t2)).
Polynomial fixture_value(const char* code_cstr) {
  const std::string code(code_cstr);
  const VarSet vs = t_vars(3);
  if (code.empty()) return Polynomial::zero(vs);
  Polynomial out = Polynomial::constant(vs, 1);
  if (code == "1") return out;
  for (size_t pos = 0; pos < code.size(); pos += 3) {
    const int a = code[pos] - '0';
    const int b = code[pos + 1] - '0';
    out = out * (Polynomial::t(vs, a) - Polynomial::t(vs, b));
  }
  return out;
}

using FixtureRow = std::array<const char*, 6>;

GkmElement fixture_element(const FixtureRow& row) {
  GkmElement f(3);
  for (int k = 0; k < 6; ++k) f.set(Permutation::parse(kFixtureVertices[k]), fixture_value(row[k]));
  return f;
}

struct FixtureArrow {
  int i;         // divided difference index
  int src, dst;  // element indices, same indexing as the vertex order above
  // The exact image of the divided difference.  For most arrows this equals
  // the row of the target element; where the drawn target only matches up to
  // support, the true image is recorded here and the target is still used
  // for the support comparison.
  FixtureRow image;
};

struct Fixture {
  const char* h;
  std::array<FixtureRow, 6> rows;  // rows[j] is the element of vertex j
  std::vector<FixtureArrow> arrows;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> fs = {
      {"[1,2,3]",
       {{{"1", "", "", "", "", ""},
         {"", "1", "", "", "", ""},
         {"", "", "1", "", "", ""},
         {"", "", "", "1", "", ""},
         {"", "", "", "", "1", ""},
         {"", "", "", "", "", "1"}}},
       {}},
      {"[2,2,3]",
       {{{"1", "1", "", "", "", ""},
         {"", "21", "", "", "", ""},
         {"", "", "1", "", "1", ""},
         {"", "", "", "1", "", "1"},
         {"", "", "", "", "31", ""},
         {"", "", "", "", "", "32"}}},
       {{1, 5, 3, {"", "", "", "1", "", "1"}},
        {1, 4, 2, {"", "", "1", "", "1", ""}},
        {1, 1, 0, {"1", "1", "", "", "", ""}}}},
      {"[1,3,3]",
       {{{"1", "", "1", "", "", ""},
         {"", "1", "", "1", "", ""},
         {"", "", "32", "", "", ""},
         {"", "", "", "31", "", ""},
         {"", "", "", "", "1", "1"},
         {"", "", "", "", "", "21"}}},
       {{2, 5, 4, {"", "", "", "", "1", "1"}},
        {2, 3, 1, {"", "1", "", "1", "", ""}},
        {2, 2, 0, {"1", "", "1", "", "", ""}}}},
      {"[2,3,3]",
       {{{"1", "1", "1", "1", "1", "1"},
         {"", "21", "", "23", "", ""},
         {"", "", "32", "", "12", ""},
         {"", "", "", "31", "", "21"},
         {"", "", "", "", "31", "32"},
         {"", "", "", "", "", "21*32"}}},
       {{1, 5, 3, {"", "", "", "21", "", "21"}},
        {2, 5, 4, {"", "", "", "", "32", "32"}}}},
      {"[3,3,3]",
       {{{"1", "1", "1", "1", "1", "1"},
         {"", "21", "", "21", "31", "31"},
         {"", "", "32", "31", "32", "31"},
         {"", "", "", "21*31", "", "21*31"},
         {"", "", "", "", "31*32", "31*32"},
         {"", "", "", "", "", "21*31*32"}}},
       {{1, 5, 3, {"", "", "", "21*31", "", "21*31"}},
        {1, 4, 2, {"", "", "32", "31", "32", "31"}},
        {1, 1, 0, {"1", "1", "1", "1", "1", "1"}},
        {2, 5, 4, {"", "", "", "", "31*32", "31*32"}},
        {2, 3, 1, {"", "21", "", "21", "31", "31"}},
        {2, 2, 0, {"1", "1", "1", "1", "1", "1"}}}},
  };
  return fs;
}

std::vector<Permutation> element_support(const GkmElement& f) {
  std::vector<Permutation> out;
  for (const auto& [v, p] : f.values())
    if (!p.is_zero()) out.push_back(v);
  return out;
}

}  // namespace

RunReport check_appendix_fixtures() {
  RunReport report;
  report.command = "check_appendix_fixtures";
  std::array<Permutation, 6> verts;
  for (int k = 0; k < 6; ++k) verts[k] = Permutation::parse(kFixtureVertices[k]);

  for (const Fixture& fix : fixtures()) {
    const HessenbergFunction h = HessenbergFunction::parse(fix.h);
    const ConditionSet C = hessenberg_conditions(h);
    const std::string tag = h.to_string();
    const FlowUpBasis basis = flow_up_basis(h);

    std::array<GkmElement, 6> els = {GkmElement(3), GkmElement(3), GkmElement(3),
                                     GkmElement(3), GkmElement(3), GkmElement(3)};
    for (int j = 0; j < 6; ++j) els[j] = fixture_element(fix.rows[j]);

    for (int j = 0; j < 6; ++j) {
      const Permutation& w = verts[j];
      const GkmElement& f = els[j];
      const std::string etag = tag + "/" + w.to_string();

      report.add(etag + "/membership", in_subring(f, C));

      std::string below;
      for (const auto& v : all_permutations(3))
        if (!bruhat_leq(w, v) && !f.at(v).is_zero()) below = v.to_string();
      report.add(etag + "/triangularity", below.empty(),
                 below.empty() ? "" : "nonzero value below the indexing vertex, at " + below);

      const Polynomial diag = prescribed_diagonal(h, w);
      report.add(etag + "/diagonal", f.at(w) == diag,
                 f.at(w) == diag ? "" : f.at(w).to_string() + " != " + diag.to_string());

      const int d = basis.degrees.at(w);
      bool homogeneous = true;
      for (const auto& [v, p] : f.values())
        if (!p.is_zero() && !p.is_homogeneous(d)) homogeneous = false;
      report.add(etag + "/homogeneous", homogeneous);

      report.add(etag + "/constructed-diagonal", basis.elements.at(w).at(w) == f.at(w));
    }

    if (h == HessenbergFunction::full(3)) {
      // The flow-up basis of the full flag is unique, so the construction
      // must reproduce the table exactly.
      bool equal = true;
      std::string which;
      for (int j = 0; j < 6; ++j)
        if (!(basis.elements.at(verts[j]) == els[j])) {
          equal = false;
          which = verts[j].to_string();
        }
      report.add(tag + "/unique-basis-equality", equal,
                 equal ? "" : "constructed element differs at " + which);
    }

    for (size_t a = 0; a < fix.arrows.size(); ++a) {
      const FixtureArrow& ar = fix.arrows[a];
      const std::string atag = tag + "/arrow-d" + std::to_string(ar.i) + "-" +
                               verts[ar.src].to_string() + "-to-" + verts[ar.dst].to_string();
      const auto image = divided_difference(ar.i, els[ar.src]);
      report.add(atag + "/defined", image.has_value());
      if (!image) continue;
      const GkmElement expected = fixture_element(ar.image);
      report.add(atag + "/exact-image", *image == expected,
                 *image == expected ? "" : "image is " + to_json(*image));
      report.add(atag + "/target-support",
                 element_support(*image) == element_support(els[ar.dst]));
      report.add(atag + "/star-invariant",
                 star(*image, Permutation::adjacent(3, ar.i)) == *image);
      const bool stable = is_stable(C, ar.i);
      const ConditionSet codomain = stable ? C : almost_stable_lower(C, ar.i);
      report.add(atag + "/image-membership", in_subring(*image, codomain));
    }
  }
  return report;
}

}  // namespace gkmhess
