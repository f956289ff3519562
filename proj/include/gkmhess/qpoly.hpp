// Polynomials in the single variable q with integer coefficients, used for
// graded dimension counts (all series that arise here have nonnegative
// coefficients).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gkmhess {

class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPolynomial zero() { return QPolynomial(); }
  static QPolynomial one() { return QPolynomial({1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  long long coefficient(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
  }
  const std::vector<long long>& coefficients() const { return c_; }

  void add_term(int k, long long v) {
    if (k < 0) return;
    if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, 0);
    c_[k] += v;
    trim();
  }

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial out = a;
    for (int k = 0; k <= b.degree(); ++k) out.add_term(k, b.coefficient(k));
    return out;
  }

  // Multiplication by q^s.
  QPolynomial shifted(int s) const {
    QPolynomial out;
    for (int k = 0; k <= degree(); ++k) out.add_term(k + s, coefficient(k));
    return out;
  }

  // (1 + q) * this.
  QPolynomial times_one_plus_q() const { return *this + shifted(1); }

  // Exact quotient by 1 + q, nullopt when the division leaves a remainder.
  std::optional<QPolynomial> divide_by_one_plus_q() const {
    if (is_zero()) return QPolynomial();
    std::vector<long long> q(c_.size(), 0);
    long long carry = 0;
    // Synthetic division: c_k = q_k + q_{k-1}.
    for (int k = 0; k <= degree(); ++k) {
      q[k] = c_[k] - carry;
      carry = q[k];
    }
    if (carry != 0) return std::nullopt;
    q.pop_back();
    return QPolynomial(std::move(q));
  }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
      if (c_[k] == 0) continue;
      if (!out.empty()) out += " + ";
      if (k == 0) {
        out += std::to_string(c_[k]);
      } else {
        if (c_[k] != 1) out += std::to_string(c_[k]) + "*";
        out += (k == 1) ? "q" : "q^" + std::to_string(k);
      }
    }
    return out.empty() ? "0" : out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<long long> c_;
};

}  // namespace gkmhess
