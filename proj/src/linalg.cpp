#include "gkmhess/linalg.hpp"

namespace gkmhess {

bool LinearSystem::add_equation(std::map<int, Rational> row, Rational rhs) {
  for (auto it = row.begin(); it != row.end();)
    it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
  if (sgn(rhs) != 0) row[cols_] = rhs;

  while (!row.empty()) {
    int lead = row.begin()->first;
    if (lead == cols_) return false;  // 0 = nonzero
    auto pivot = rows_.find(lead);
    if (pivot == rows_.end()) {
      Rational scale = row.begin()->second;
      for (auto& [c, v] : row) v /= scale;
      rows_.emplace(lead, std::move(row));
      return true;
    }
    // Eliminate the leading entry against the stored pivot row.
    Rational factor = row.begin()->second;
    for (const auto& [c, v] : pivot->second) {
      auto it = row.find(c);
      if (it == row.end()) {
        row.emplace(c, -factor * v);
      } else {
        it->second -= factor * v;
        if (sgn(it->second) == 0) row.erase(it);
      }
    }
  }
  return true;  // dependent equation
}

std::vector<Rational> LinearSystem::solve() const {
  std::vector<Rational> value(cols_, Rational(0));
  // Back-substitute in descending pivot order; free variables stay zero.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    Rational v(0);
    for (const auto& [c, coeff] : it->second) {
      if (c == it->first) continue;
      if (c == cols_)
        v += coeff;
      else
        v -= coeff * value[c];
    }
    value[it->first] = v;
  }
  return value;
}

}  // namespace gkmhess
