#include "gkmhess/permutation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gkmhess {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n == 0) throw std::invalid_argument("permutation: empty word");
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("permutation: not a rearrangement of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation: n must be positive");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("adjacent: index out of range");
  Permutation w = identity(n);
  std::swap(w.word_[i - 1], w.word_[i]);
  return w;
}

Permutation Permutation::longest(int n) {
  if (n < 1) throw std::invalid_argument("permutation: n must be positive");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > n()) throw std::invalid_argument("permutation: position out of range");
  return word_[i - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= n(); ++i) inv[word_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (word_[i - 1] != i) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv;
}

bool Permutation::has_descent(int i) const {
  if (i < 1 || i > n() - 1) throw std::invalid_argument("descent: index out of range");
  return word_[i - 1] > word_[i];
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < n(); ++i) {
    if (i) out << ',';
    out << word_[i];
  }
  out << ']';
  return out.str();
}

Permutation Permutation::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 3 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("permutation: expected [a,b,..]");
  std::vector<int> word;
  std::string body = s.substr(1, s.size() - 2);
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("permutation: empty entry");
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("permutation: bad entry '" + item + "'");
    word.push_back(v);
  }
  return Permutation(std::move(word));
}

Permutation operator*(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<int> out(v.n());
  for (int i = 1; i <= v.n(); ++i) out[i - 1] = v(w(i));
  return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i) word[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  const int n = v.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int cv = 0, cw = 0;
      for (int a = 1; a <= i; ++a) {
        if (v(a) >= j) ++cv;
        if (w(a) >= j) ++cw;
      }
      if (cv > cw) return false;
    }
  }
  return true;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> letters;
  Permutation u = w;
  while (!u.is_identity()) {
    int i = 1;
    while (!u.has_descent(i)) ++i;
    u = u * Permutation::adjacent(u.n(), i);
    letters.push_back(i);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

Transposition::Transposition(int a, int b) : i(std::min(a, b)), k(std::max(a, b)) {
  if (a == b || a < 1 || b < 1) throw std::invalid_argument("transposition: bad endpoints");
}

std::string Transposition::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(k) + ")";
}

Permutation to_permutation(const Transposition& t, int n) {
  if (t.k > n) throw std::invalid_argument("transposition: endpoint exceeds n");
  Permutation w = Permutation::identity(n);
  std::vector<int> word = w.word();
  std::swap(word[t.i - 1], word[t.k - 1]);
  return Permutation(std::move(word));
}

Transposition conjugate_by_adjacent(const Transposition& t, int i) {
  auto map = [i](int a) {
    if (a == i) return i + 1;
    if (a == i + 1) return i;
    return a;
  };
  return Transposition(map(t.i), map(t.k));
}

std::vector<Permutation> subgroup_generated(const std::vector<Transposition>& gens, int n) {
  std::set<Permutation> members;
  members.insert(Permutation::identity(n));
  std::vector<Permutation> gperms;
  for (const auto& t : gens) gperms.push_back(to_permutation(t, n));
  std::vector<Permutation> frontier(members.begin(), members.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : frontier) {
      for (const auto& g : gperms) {
        Permutation candidate = w * g;
        if (members.insert(candidate).second) next.push_back(candidate);
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Permutation>(members.begin(), members.end());
}

std::vector<Permutation> coset_representatives(const std::vector<Transposition>& gens, int n) {
  std::vector<Permutation> subgroup = subgroup_generated(gens, n);
  std::set<Permutation> covered;
  std::vector<Permutation> reps;
  for (const auto& w : all_permutations(n)) {
    if (covered.count(w)) continue;
    reps.push_back(w);
    for (const auto& g : subgroup) covered.insert(w * g);
  }
  return reps;
}

}  // namespace gkmhess
