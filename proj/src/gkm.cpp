#include "gkmhess/gkm.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace gkmhess {

GkmElement::GkmElement(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("gkm element: n must be positive");
  const Polynomial z = Polynomial::zero(t_vars(n));
  for (const auto& v : all_permutations(n)) values_.emplace(v, z);
}

GkmElement GkmElement::constant(int n, const Rational& c) {
  GkmElement f(n);
  const Polynomial p = Polynomial::constant(t_vars(n), c);
  for (auto& [v, val] : f.values_) val = p;
  return f;
}

const Polynomial& GkmElement::at(const Permutation& v) const {
  auto it = values_.find(v);
  if (it == values_.end()) throw std::invalid_argument("gkm element: vertex of wrong rank");
  return it->second;
}

void GkmElement::set(const Permutation& v, Polynomial p) {
  if (!(p.vars() == t_vars(n_)))
    throw std::invalid_argument("gkm element: value must use the t-variables of rank n");
  auto it = values_.find(v);
  if (it == values_.end()) throw std::invalid_argument("gkm element: vertex of wrong rank");
  it->second = std::move(p);
}

bool GkmElement::is_zero() const {
  for (const auto& [v, p] : values_)
    if (!p.is_zero()) return false;
  return true;
}

GkmElement GkmElement::operator-() const {
  GkmElement out(n_);
  for (const auto& [v, p] : values_) out.values_.at(v) = -p;
  return out;
}

GkmElement& GkmElement::operator+=(const GkmElement& g) {
  if (n_ != g.n_) throw std::invalid_argument("gkm add: rank mismatch");
  for (auto& [v, p] : values_) p += g.values_.at(v);
  return *this;
}

GkmElement& GkmElement::operator-=(const GkmElement& g) {
  if (n_ != g.n_) throw std::invalid_argument("gkm subtract: rank mismatch");
  for (auto& [v, p] : values_) p -= g.values_.at(v);
  return *this;
}

GkmElement operator*(const GkmElement& f, const GkmElement& g) {
  if (f.n_ != g.n_) throw std::invalid_argument("gkm multiply: rank mismatch");
  GkmElement out(f.n_);
  for (auto& [v, p] : out.values_) p = f.values_.at(v) * g.values_.at(v);
  return out;
}

GkmElement operator*(const Rational& c, const GkmElement& f) {
  GkmElement out(f.n_);
  for (auto& [v, p] : out.values_) p = c * f.values_.at(v);
  return out;
}

GkmElement operator*(const Polynomial& c, const GkmElement& f) {
  if (!(c.vars() == t_vars(f.n_)))
    throw std::invalid_argument("gkm scale: scalar must use the t-variables of rank n");
  GkmElement out(f.n_);
  for (auto& [v, p] : out.values_) p = c * f.values_.at(v);
  return out;
}

bool operator==(const GkmElement& f, const GkmElement& g) {
  return f.n_ == g.n_ && f.values_ == g.values_;
}

GkmElement phi(const Polynomial& p) {
  const VarSet& vs = p.vars();
  if (vs.t_count != vs.x_count || vs.x_extra != 0 || vs.has_q || vs.t_count < 1)
    throw std::invalid_argument("phi: expected a polynomial in t1..tn, x1..xn");
  const int n = vs.t_count;
  GkmElement out(n);
  const VarSet target = t_vars(n);
  for (const auto& v : all_permutations(n)) {
    Polynomial val(target);
    for (const auto& [e, c] : p.terms()) {
      Monomial m(n, 0);
      for (int j = 0; j < n; ++j) m[j] = e[j];
      for (int i = 1; i <= n; ++i) m[v(i) - 1] += e[n + i - 1];
      val.add_term(m, c);
    }
    out.set(v, std::move(val));
  }
  return out;
}

GkmElement phi_x_difference(int n, int a, int b) {
  const VarSet vs = tx_vars(n);
  return phi(Polynomial::x(vs, a) - Polynomial::x(vs, b));
}

GkmElement dot(const Permutation& w, const GkmElement& f) {
  if (w.n() != f.n()) throw std::invalid_argument("dot: rank mismatch");
  GkmElement out(f.n());
  const Permutation winv = w.inverse();
  for (const auto& v : all_permutations(f.n()))
    out.set(v, permute_t_vars(f.at(winv * v), w));
  return out;
}

GkmElement star(const GkmElement& f, const Permutation& w) {
  if (w.n() != f.n()) throw std::invalid_argument("star: rank mismatch");
  GkmElement out(f.n());
  const Permutation winv = w.inverse();
  for (const auto& v : all_permutations(f.n())) out.set(v, f.at(v * winv));
  return out;
}

bool satisfies_condition(const GkmElement& f, const Transposition& tau) {
  const int n = f.n();
  if (tau.k > n) throw std::invalid_argument("satisfies_condition: endpoint exceeds n");
  const VarSet vs = t_vars(n);
  const Permutation tp = to_permutation(tau, n);
  for (const auto& [v, p] : f.values()) {
    const Polynomial diff = p - f.at(v * tp);
    if (diff.is_zero()) continue;
    const Polynomial form = Polynomial::t(vs, v(tau.i)) - Polynomial::t(vs, v(tau.k));
    if (!exact_divide(diff, form)) return false;
  }
  return true;
}

bool in_subring(const GkmElement& f, const ConditionSet& C) {
  if (C.n() != f.n()) throw std::invalid_argument("in_subring: rank mismatch");
  for (const auto& tau : C.conditions())
    if (!satisfies_condition(f, tau)) return false;
  return true;
}

std::optional<GkmElement> divided_difference(int i, const GkmElement& f) {
  const int n = f.n();
  if (i < 1 || i > n - 1) throw std::invalid_argument("divided_difference: index out of range");
  const VarSet vs = t_vars(n);
  const Permutation si = Permutation::adjacent(n, i);
  GkmElement out(n);
  for (const auto& [v, p] : f.values()) {
    const Polynomial num = p - f.at(v * si);
    if (num.is_zero()) continue;
    const Polynomial den = Polynomial::t(vs, v(i)) - Polynomial::t(vs, v(i + 1));
    auto quot = exact_divide(num, den);
    if (!quot) return std::nullopt;
    out.set(v, std::move(*quot));
  }
  return out;
}

std::pair<GkmElement, GkmElement> stable_decompose(const GkmElement& f, int i, const ConditionSet& C) {
  if (C.n() != f.n()) throw std::invalid_argument("stable_decompose: rank mismatch");
  if (!is_stable(C, i))
    throw std::invalid_argument("stable_decompose: condition set is not stable at " + std::to_string(i));
  auto dd = divided_difference(i, f);
  if (!dd)
    throw std::invalid_argument("stable_decompose: divided difference undefined; element not in the subring");
  const Rational half(1, 2);
  GkmElement g = half * (f + star(f, Permutation::adjacent(f.n(), i)));
  GkmElement h = half * *dd;
  return {std::move(g), std::move(h)};
}

namespace {

// Witness endpoints split by whether the witness contains i or i+1; the
// remaining endpoint is k (never i or i+1).
struct WitnessShape {
  bool contains_i;
  int k;
};

WitnessShape witness_shape(const ConditionSet& C, int i) {
  auto tau = almost_stable_witness(C, i);
  if (!tau)
    throw std::invalid_argument("almost_stable: condition set is not almost-stable at " + std::to_string(i));
  if (tau->i == i || tau->k == i) return {true, tau->i == i ? tau->k : tau->i};
  if (tau->i == i + 1 || tau->k == i + 1) return {false, tau->i == i + 1 ? tau->k : tau->i};
  throw std::logic_error("almost_stable: witness disjoint from {i, i+1}");
}

}  // namespace

std::pair<GkmElement, GkmElement> almost_stable_decompose(const GkmElement& f, int i, const ConditionSet& C) {
  if (C.n() != f.n()) throw std::invalid_argument("almost_stable_decompose: rank mismatch");
  const WitnessShape shape = witness_shape(C, i);
  const int n = f.n();
  const GkmElement base = shape.contains_i ? f : star(f, Permutation::adjacent(n, i));
  auto p = divided_difference(i, phi_x_difference(n, shape.k, i + 1) * base);
  auto m = divided_difference(i, base);
  if (!p || !m)
    throw std::invalid_argument("almost_stable_decompose: divided difference undefined; element not in the subring");
  if (!shape.contains_i) *m = -*m;
  return {std::move(*p), std::move(*m)};
}

std::pair<int, int> almost_stable_multiplier(const ConditionSet& C, int i) {
  const WitnessShape shape = witness_shape(C, i);
  if (shape.contains_i) return {i, shape.k};
  return {shape.k, i + 1};
}

ConditionSet almost_stable_lower(const ConditionSet& C, int i) {
  auto tau = almost_stable_witness(C, i);
  if (!tau)
    throw std::invalid_argument("almost_stable_lower: condition set is not almost-stable at " + std::to_string(i));
  return C.without(*tau);
}

ConditionSet almost_stable_upper(const ConditionSet& C, int i) {
  auto tau = almost_stable_witness(C, i);
  if (!tau)
    throw std::invalid_argument("almost_stable_upper: condition set is not almost-stable at " + std::to_string(i));
  return C.with(conjugate_by_adjacent(*tau, i));
}

GkmElement coset_indicator(const ConditionSet& C) {
  std::vector<Transposition> gens(C.conditions().begin(), C.conditions().end());
  GkmElement out(C.n());
  const Polynomial one = Polynomial::constant(t_vars(C.n()), 1);
  for (const auto& w : subgroup_generated(gens, C.n())) out.set(w, one);
  return out;
}

std::string to_json(const GkmElement& f) {
  nlohmann::ordered_json j;
  j["n"] = f.n();
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (const auto& [v, p] : f.values()) values[v.to_string()] = p.to_string();
  j["values"] = std::move(values);
  return j.dump();
}

GkmElement gkm_element_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("gkm element json: missing integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 1 || n > 9) throw std::invalid_argument("gkm element json: n out of range");
  if (!j.contains("values") || !j["values"].is_object())
    throw std::invalid_argument("gkm element json: missing object field 'values'");
  GkmElement out(n);
  const VarSet vs = t_vars(n);
  size_t assigned = 0;
  for (const auto& v : all_permutations(n)) {
    const std::string key = v.to_string();
    if (!j["values"].contains(key))
      throw std::invalid_argument("gkm element json: missing vertex " + key);
    out.set(v, parse_polynomial(vs, j["values"][key].get<std::string>()));
    ++assigned;
  }
  if (j["values"].size() != assigned)
    throw std::invalid_argument("gkm element json: unexpected extra vertex keys");
  return out;
}

}  // namespace gkmhess
