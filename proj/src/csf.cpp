#include "gkmhess/csf.hpp"

#include <stdexcept>

#include "gkmhess/flowup.hpp"
#include "gkmhess/gkm.hpp"

namespace gkmhess {

IndifferenceGraph indifference_graph(const HessenbergFunction& h) {
  IndifferenceGraph g;
  g.n = h.n();
  for (int i = 1; i <= h.n(); ++i)
    for (int k = i + 1; k <= h(i); ++k) g.edges.emplace_back(i, k);
  return g;
}

Polynomial csf_truncated(const HessenbergFunction& h, int m) {
  if (m < 1) throw std::invalid_argument("csf_truncated: need at least one color");
  const IndifferenceGraph g = indifference_graph(h);
  const int n = g.n;
  const VarSet vs = color_vars(n, m);
  Polynomial out(vs);
  std::vector<int> kappa(n, 1);
  while (true) {
    bool proper = true;
    for (const auto& [i, k] : g.edges)
      if (kappa[i - 1] == kappa[k - 1]) { proper = false; break; }
    if (proper) {
      int asc = 0;
      for (const auto& [i, k] : g.edges)
        if (kappa[i - 1] < kappa[k - 1]) ++asc;
      Monomial mono(vs.total_vars(), 0);
      for (int i = 0; i < n; ++i) ++mono[kappa[i] - 1];
      mono[vs.total_vars() - 1] = asc;
      out.add_term(mono, 1);
    }
    int pos = n - 1;
    while (pos >= 0 && kappa[pos] == m) kappa[pos--] = 1;
    if (pos < 0) break;
    ++kappa[pos];
  }
  return out;
}

std::vector<ModularTriple> modular_triples(int n) {
  std::vector<ModularTriple> out;
  for (const auto& h : HessenbergFunction::all(n)) {
    const ConditionSet C = hessenberg_conditions(h);
    for (int i = 1; i <= n - 1; ++i) {
      auto tau = almost_stable_witness(C, i);
      if (!tau) continue;
      auto lower = conditions_to_hessenberg(almost_stable_lower(C, i));
      auto upper = conditions_to_hessenberg(almost_stable_upper(C, i));
      if (!lower || !upper) continue;  // not Hessenberg-shaped; excluded
      out.push_back(ModularTriple{*lower, h, *upper, i, *tau});
    }
  }
  return out;
}

Polynomial modular_relation_defect(const ModularTriple& triple, int m) {
  const Polynomial mid = csf_truncated(triple.h, m);
  const Polynomial plus = csf_truncated(triple.h_plus, m);
  const Polynomial minus = csf_truncated(triple.h_minus, m);
  const VarSet vs = mid.vars();
  const Polynomial one = Polynomial::constant(vs, 1);
  const Polynomial q = Polynomial::q(vs);
  return (one + q) * mid - (plus + q * minus);
}

QPolynomial squarefree_coefficient(const HessenbergFunction& h, int m) {
  const int n = h.n();
  if (m < n) throw std::invalid_argument("squarefree_coefficient: need m >= n");
  const Polynomial p = csf_truncated(h, m);
  QPolynomial out;
  for (const auto& [mono, c] : p.terms()) {
    bool squarefree = true;
    for (int i = 0; i < n; ++i)
      if (mono[i] != 1) { squarefree = false; break; }
    for (int i = n; i < p.vars().total_x(); ++i)
      if (mono[i] != 0) { squarefree = false; break; }
    if (!squarefree) continue;
    // Coefficients are coloring counts, hence machine integers.
    out.add_term(mono[p.vars().total_vars() - 1], static_cast<long long>(c.get_num().get_si()));
  }
  return out;
}

RunReport verify_modular_relation(const ModularTriple& triple, int m) {
  RunReport report;
  report.command = "verify_modular_relation " + triple.h_minus.to_string() + " " +
                   triple.h.to_string() + " " + triple.h_plus.to_string() +
                   " i=" + std::to_string(triple.i) + " m=" + std::to_string(m);
  const ConditionSet C = hessenberg_conditions(triple.h);
  const auto witness = almost_stable_witness(C, triple.i);
  const bool valid = witness.has_value() && *witness == triple.tau &&
                     hessenberg_conditions(triple.h_minus) == C.without(triple.tau) &&
                     hessenberg_conditions(triple.h_plus) ==
                         C.with(conjugate_by_adjacent(triple.tau, triple.i));
  report.add("valid-triple", valid, valid ? "" : "not an almost-stable modular triple");
  if (!valid) return report;

  const Polynomial defect = modular_relation_defect(triple, m);
  std::string detail;
  if (!defect.is_zero()) {
    Polynomial lead(defect.vars());
    const auto& [mono, c] = *defect.terms().begin();
    lead.add_term(mono, c);
    detail = "defect leading term " + lead.to_string();
  }
  report.add("modular-relation", defect.is_zero(), detail);
  return report;
}

RunReport csf_poincare_consistency(const HessenbergFunction& h) {
  RunReport report;
  report.command = "csf_poincare_consistency " + h.to_string();
  const int n = h.n();
  const bool full = h == HessenbergFunction::full(n);
  report.add("full-flag-input", full,
             full ? "" : "squarefree coefficient matches the Poincare series only for h = [n,..,n]");
  if (!full) return report;
  const QPolynomial sq = squarefree_coefficient(h, n);
  const QPolynomial poin = poincare_series(h);
  report.add("squarefree-equals-poincare", sq == poin,
             sq == poin ? "" : sq.to_string() + " != " + poin.to_string());
  return report;
}

}  // namespace gkmhess
