#include "gkmhess/schubert.hpp"

#include <algorithm>
#include <stdexcept>

#include "gkmhess/flowup.hpp"
#include "gkmhess/gkm.hpp"

namespace gkmhess {

Polynomial poly_divided_difference(int i, const Polynomial& p) {
  const VarSet& vs = p.vars();
  if (i < 1 || i > vs.total_x() - 1)
    throw std::invalid_argument("poly_divided_difference: index out of range");
  const Permutation si = Permutation::adjacent(vs.total_x(), i);
  const Polynomial num = p - permute_x_vars(p, si);
  const Polynomial den = Polynomial::x(vs, i) - Polynomial::x(vs, i + 1);
  auto quot = exact_divide(num, den);
  if (!quot) throw std::logic_error("poly_divided_difference: quotient not exact");
  return *quot;
}

namespace {

SchubertTable build_table(int n, Polynomial top) {
  SchubertTable table;
  table.n = n;
  std::vector<Permutation> perms = all_permutations(n);
  std::sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
    int la = a.length(), lb = b.length();
    return la != lb ? la > lb : a < b;
  });
  table.entries.emplace(Permutation::longest(n), std::move(top));
  for (const auto& w : perms) {
    if (w == Permutation::longest(n)) continue;
    // Every ascent i of w yields a parent w*s_i one step up; the recursion
    // must give the same polynomial along each.
    bool have = false;
    Polynomial entry = Polynomial::zero(tx_vars(n));
    for (int i = 1; i <= n - 1; ++i) {
      if (w.has_descent(i)) continue;
      const Permutation parent = w * Permutation::adjacent(n, i);
      Polynomial candidate = poly_divided_difference(i, table.entries.at(parent));
      if (!have) {
        entry = std::move(candidate);
        have = true;
      } else if (!(candidate == entry)) {
        throw std::logic_error("schubert recursion: paths disagree at " + w.to_string());
      }
    }
    if (!have) throw std::logic_error("schubert recursion: no parent for " + w.to_string());
    table.entries.emplace(w, std::move(entry));
  }
  return table;
}

}  // namespace

SchubertTable schubert_table(int n) {
  if (n < 1) throw std::invalid_argument("schubert_table: n must be positive");
  const VarSet vs = tx_vars(n);
  Polynomial top = Polynomial::constant(vs, 1);
  for (int i = 1; i <= n - 1; ++i) {
    Monomial m(vs.total_vars(), 0);
    m[vs.t_count + i - 1] = n - i;
    Polynomial pow(vs);
    pow.add_term(m, 1);
    top = top * pow;
  }
  return build_table(n, std::move(top));
}

SchubertTable double_schubert_table(int n) {
  if (n < 1) throw std::invalid_argument("double_schubert_table: n must be positive");
  const VarSet vs = tx_vars(n);
  Polynomial top = Polynomial::constant(vs, 1);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; i + k <= n; ++k)
      top = top * (Polynomial::x(vs, i) - Polynomial::t(vs, k));
  return build_table(n, std::move(top));
}

RunReport double_schubert_flow_up_check(int n) {
  RunReport report;
  report.command = "double_schubert_flow_up_check " + std::to_string(n);
  const SchubertTable table = double_schubert_table(n);
  const HessenbergFunction full = HessenbergFunction::full(n);
  const auto perms = all_permutations(n);
  for (const auto& w : perms) {
    const GkmElement g = phi(table.entries.at(w));
    const std::string tag = "n=" + std::to_string(n) + "/" + w.to_string();
    std::string bad;
    for (const auto& v : perms)
      if (!bruhat_leq(w, v) && !g.at(v).is_zero()) bad = v.to_string();
    report.add(tag + "/support", bad.empty(), bad.empty() ? "" : "nonzero value at " + bad);
    const Polynomial diag = prescribed_diagonal(full, w);
    report.add(tag + "/diagonal", g.at(w) == diag,
               g.at(w) == diag ? "" : g.at(w).to_string() + " != " + diag.to_string());
  }
  return report;
}

}  // namespace gkmhess
