#include "gkmhess/hessenberg.hpp"

#include <sstream>
#include <stdexcept>

namespace gkmhess {

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n == 0) throw std::invalid_argument("hessenberg: empty");
  for (int i = 1; i <= n; ++i) {
    if (values_[i - 1] < i || values_[i - 1] > n)
      throw std::invalid_argument("hessenberg: need i <= h(i) <= n");
    if (i > 1 && values_[i - 1] < values_[i - 2])
      throw std::invalid_argument("hessenberg: must be nondecreasing");
  }
}

HessenbergFunction HessenbergFunction::full(int n) {
  return HessenbergFunction(std::vector<int>(n, n));
}

HessenbergFunction HessenbergFunction::smallest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return HessenbergFunction(std::move(v));
}

std::vector<HessenbergFunction> HessenbergFunction::all(int n) {
  std::vector<HessenbergFunction> out;
  std::vector<int> v(n);
  auto rec = [&](auto&& self, int i, int lo) -> void {
    if (i == n) {
      out.push_back(HessenbergFunction(v));
      return;
    }
    for (int val = std::max(i + 1, lo); val <= n; ++val) {
      v[i] = val;
      self(self, i + 1, val);
    }
  };
  rec(rec, 0, 1);
  return out;
}

int HessenbergFunction::operator()(int i) const {
  if (i < 1 || i > n()) throw std::invalid_argument("hessenberg: index out of range");
  return values_[i - 1];
}

std::string HessenbergFunction::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < n(); ++i) {
    if (i) out << ',';
    out << values_[i];
  }
  out << ']';
  return out.str();
}

HessenbergFunction HessenbergFunction::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::vector<int> vals;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("hessenberg: bad entry '" + item + "'");
    vals.push_back(v);
  }
  return HessenbergFunction(std::move(vals));
}

ConditionSet::ConditionSet(int n, std::set<Transposition> conditions)
    : n_(n), conditions_(std::move(conditions)) {
  if (n_ < 1) throw std::invalid_argument("condition set: n must be positive");
  for (const auto& t : conditions_)
    if (t.k > n_) throw std::invalid_argument("condition set: endpoint exceeds n");
}

ConditionSet ConditionSet::with(const Transposition& t) const {
  std::set<Transposition> c = conditions_;
  c.insert(t);
  return ConditionSet(n_, std::move(c));
}

ConditionSet ConditionSet::without(const Transposition& t) const {
  std::set<Transposition> c = conditions_;
  c.erase(t);
  return ConditionSet(n_, std::move(c));
}

ConditionSet ConditionSet::conjugated_by_adjacent(int i) const {
  std::set<Transposition> c;
  for (const auto& t : conditions_) c.insert(conjugate_by_adjacent(t, i));
  return ConditionSet(n_, std::move(c));
}

std::string ConditionSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& t : conditions_) {
    if (!first) out << ',';
    out << t.to_string();
    first = false;
  }
  out << '}';
  return out.str();
}

ConditionSet hessenberg_conditions(const HessenbergFunction& h) {
  std::set<Transposition> c;
  for (int i = 1; i <= h.n(); ++i)
    for (int k = i + 1; k <= h(i); ++k) c.insert(Transposition(i, k));
  return ConditionSet(h.n(), std::move(c));
}

std::optional<HessenbergFunction> conditions_to_hessenberg(const ConditionSet& C) {
  const int n = C.n();
  std::vector<int> h(n);
  for (int i = 1; i <= n; ++i) {
    int top = i;
    for (const auto& t : C.conditions())
      if (t.i == i) top = std::max(top, t.k);
    h[i - 1] = top;
  }
  for (int i = 1; i < n; ++i)
    if (h[i] < h[i - 1]) return std::nullopt;
  HessenbergFunction candidate(h);
  if (!(hessenberg_conditions(candidate) == C)) return std::nullopt;
  return candidate;
}

bool is_stable(const ConditionSet& C, int i) {
  if (i < 1 || i > C.n() - 1) throw std::invalid_argument("is_stable: index out of range");
  if (!C.contains_adjacent(i)) return false;
  return C.conjugated_by_adjacent(i) == C;
}

std::optional<Transposition> almost_stable_witness(const ConditionSet& C, int i) {
  if (i < 1 || i > C.n() - 1) throw std::invalid_argument("almost_stable_witness: index out of range");
  if (!C.contains_adjacent(i)) return std::nullopt;
  std::vector<Transposition> escaped;
  for (const auto& t : C.conditions())
    if (!C.contains(conjugate_by_adjacent(t, i))) escaped.push_back(t);
  if (escaped.size() != 1) return std::nullopt;
  return escaped.front();
}

}  // namespace gkmhess
