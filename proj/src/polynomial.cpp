#include "gkmhess/polynomial.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gkmhess {

VarSet t_vars(int n) { return VarSet{n, 0, 0, false}; }
VarSet tx_vars(int n) { return VarSet{n, n, 0, false}; }

VarSet color_vars(int n, int m) {
  if (m < 1) throw std::invalid_argument("color_vars: need at least one color");
  return VarSet{0, std::min(n, m), std::max(0, m - n), true};
}

std::string var_name(const VarSet& vs, int index) {
  if (index < 0 || index >= vs.total_vars()) throw std::invalid_argument("var_name: index out of range");
  if (index < vs.t_count) return "t" + std::to_string(index + 1);
  index -= vs.t_count;
  if (index < vs.total_x()) return "x" + std::to_string(index + 1);
  return "q";
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;  // lexicographic, earlier variables more significant
}

Polynomial::Polynomial(VarSet vs) : vars_(vs) {}

Polynomial Polynomial::constant(VarSet vs, Rational c) {
  Polynomial p(vs);
  p.add_term(Monomial(vs.total_vars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(VarSet vs, int index) {
  if (index < 0 || index >= vs.total_vars()) throw std::invalid_argument("variable: index out of range");
  Polynomial p(vs);
  Monomial m(vs.total_vars(), 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::t(VarSet vs, int i) {
  if (i < 1 || i > vs.t_count) throw std::invalid_argument("t: index out of range");
  return variable(vs, i - 1);
}

Polynomial Polynomial::x(VarSet vs, int i) {
  if (i < 1 || i > vs.total_x()) throw std::invalid_argument("x: index out of range");
  return variable(vs, vs.t_count + i - 1);
}

Polynomial Polynomial::q(VarSet vs) {
  if (!vs.has_q) throw std::invalid_argument("q: variable set has no q");
  return variable(vs, vs.total_vars() - 1);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != vars_.total_vars())
    throw std::invalid_argument("add_term: exponent vector has wrong arity");
  for (int e : m)
    if (e < 0) throw std::invalid_argument("add_term: negative exponent");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<int> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  // First term has maximal total degree under graded-lex descending order.
  const Monomial& m = terms_.begin()->first;
  return std::accumulate(m.begin(), m.end(), 0);
}

bool Polynomial::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_)
    if (std::accumulate(m.begin(), m.end(), 0) != d) return false;
  return true;
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_)
    if (std::accumulate(m.begin(), m.end(), 0) == d) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

static void require_same_vars(const VarSet& a, const VarSet& b, const char* op) {
  if (!(a == b)) throw std::invalid_argument(std::string(op) + ": variable sets differ");
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same_vars(vars_, g.vars_, "add");
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  require_same_vars(vars_, g.vars_, "subtract");
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_vars(f.vars_, g.vars_, "multiply");
  Polynomial out(f.vars_);
  const int nv = f.vars_.total_vars();
  Monomial m(nv);
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) {
      for (int i = 0; i < nv; ++i) m[i] = mf[i] + mg[i];
      out.add_term(m, cf * cg);
    }
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
  Polynomial out(f.vars_);
  if (sgn(c) == 0) return out;
  for (const auto& [m, fc] : f.terms_) out.terms_.emplace(m, c * fc);
  return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return f.vars_ == g.vars_ && f.terms_ == g.terms_;
}

std::string to_string(const Rational& c) { return c.get_str(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        out << '-';
        a = -a;
      }
    } else {
      out << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    bool any_var = false;
    std::ostringstream mono;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (m[i] == 0) continue;
      if (any_var) mono << '*';
      mono << var_name(vars_, i);
      if (m[i] > 1) mono << '^' << m[i];
      any_var = true;
    }
    if (!any_var) {
      out << gkmhess::to_string(a);
    } else {
      if (a != 1) out << gkmhess::to_string(a) << '*';
      out << mono.str();
    }
  }
  return out.str();
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same_vars(f.vars(), g.vars(), "exact_divide");
  if (g.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  Polynomial rem = f;
  Polynomial quot(f.vars());
  const auto& lead = *g.terms().begin();
  const int nv = f.vars().total_vars();
  while (!rem.is_zero()) {
    const auto& top = *rem.terms().begin();
    Monomial m(nv);
    for (int i = 0; i < nv; ++i) {
      m[i] = top.first[i] - lead.first[i];
      if (m[i] < 0) return std::nullopt;
    }
    Rational c = top.second / lead.second;
    Polynomial piece(f.vars());
    piece.add_term(m, c);
    quot += piece;
    rem -= piece * g;
  }
  return quot;
}

Polynomial permute_t_vars(const Polynomial& f, const Permutation& w) {
  if (w.n() != f.vars().t_count) throw std::invalid_argument("permute_t_vars: rank mismatch");
  Polynomial out(f.vars());
  const int nv = f.vars().total_vars();
  const Permutation inv = w.inverse();
  Monomial m(nv);
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < nv; ++i) m[i] = e[i];
    for (int j = 1; j <= w.n(); ++j) m[j - 1] = e[inv(j) - 1];
    out.add_term(m, c);
  }
  return out;
}

Polynomial permute_x_vars(const Polynomial& f, const Permutation& w) {
  if (w.n() != f.vars().total_x()) throw std::invalid_argument("permute_x_vars: rank mismatch");
  Polynomial out(f.vars());
  const int nv = f.vars().total_vars();
  const int base = f.vars().t_count;
  Monomial m(nv);
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < nv; ++i) m[i] = e[i];
    // x_i -> x_{w^{-1}(i)}, so position j receives the exponent of x_{w(j)}.
    for (int j = 1; j <= w.n(); ++j) m[base + j - 1] = e[base + w(j) - 1];
    out.add_term(m, c);
  }
  return out;
}

Polynomial set_t_zero(const Polynomial& f) {
  Polynomial out(f.vars());
  for (const auto& [m, c] : f.terms()) {
    bool has_t = false;
    for (int i = 0; i < f.vars().t_count; ++i)
      if (m[i] > 0) { has_t = true; break; }
    if (!has_t) out.add_term(m, c);
  }
  return out;
}

namespace {

// Recursive-descent parser for the canonical polynomial text form.
class Parser {
public:
  Parser(const VarSet& vs, const std::string& text) : vs_(vs), text_(text) {}

  Polynomial run() {
    Polynomial acc(vs_);
    skip_space();
    bool negate = consume_sign();
    acc += parse_term(negate);
    skip_space();
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_space();
      acc += parse_term(c == '-');
      skip_space();
    }
    return acc;
  }

private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume_sign() {
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      bool neg = text_[pos_] == '-';
      ++pos_;
      skip_space();
      return neg;
    }
    return false;
  }

  std::string read_digits() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  Polynomial parse_term(bool negate) {
    Rational coeff(negate ? -1 : 1);
    Monomial mono(vs_.total_vars(), 0);
    bool saw_factor = false;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num(read_digits());
        mpz_class den(1);
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '/') {
          ++pos_;
          skip_space();
          den = mpz_class(read_digits());
          if (sgn(den) == 0) fail("zero denominator");
        }
        Rational r(num, den);
        r.canonicalize();
        coeff *= r;
      } else if (c == 't' || c == 'x' || c == 'q') {
        int index = parse_variable();
        int exp = 1;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip_space();
          exp = std::stoi(read_digits());
        }
        mono[index] += exp;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      saw_factor = true;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!saw_factor) fail("empty term");
    Polynomial p(vs_);
    p.add_term(mono, coeff);
    return p;
  }

  int parse_variable() {
    char kind = text_[pos_++];
    if (kind == 'q') {
      if (!vs_.has_q) fail("variable q not in variable set");
      return vs_.total_vars() - 1;
    }
    int i = std::stoi(read_digits());
    if (kind == 't') {
      if (i < 1 || i > vs_.t_count) fail("t index out of range");
      return i - 1;
    }
    if (i < 1 || i > vs_.total_x()) fail("x index out of range");
    return vs_.t_count + i - 1;
  }

  VarSet vs_;
  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const VarSet& vs, const std::string& text) {
  std::string trimmed = text;
  // The zero polynomial prints as "0"; the general parser also accepts it.
  return Parser(vs, trimmed).run();
}

}  // namespace gkmhess
