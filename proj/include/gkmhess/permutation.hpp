// Permutations of {1..n} in one-line notation, Bruhat order, transpositions,
// and the subgroup/coset machinery needed for condition sets.
//
// Composition convention: (v*w)(i) = v(w(i)).  Right-multiplying by the
// adjacent transposition s_i swaps positions i and i+1 of the one-line word.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gkmhess {

class Permutation {
public:
  Permutation() = default;
  // One-line notation, 1-based values: word[i-1] = w(i).  Throws
  // std::invalid_argument unless word is a permutation of 1..n.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  // s_i, swaps i and i+1; requires 1 <= i <= n-1.
  static Permutation adjacent(int n, int i);
  // Longest element [n, n-1, .., 1].
  static Permutation longest(int n);

  int n() const { return static_cast<int>(word_.size()); }
  // w(i), 1-based.
  int operator()(int i) const;
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  bool is_identity() const;
  // Number of inversions.
  int length() const;
  // True when w(i) > w(i+1).
  bool has_descent(int i) const;

  // "[2,1,3]"
  std::string to_string() const;
  static Permutation parse(const std::string& text);

  friend Permutation operator*(const Permutation& v, const Permutation& w);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> word_;
};

// All of S_n in lexicographic one-line order.  This is the enumeration order
// used everywhere a deterministic iteration over the group matters.
std::vector<Permutation> all_permutations(int n);

// Bruhat order via the rank-count criterion:
//   v <= w  iff  #{a <= i : v(a) >= j} <= #{a <= i : w(a) >= j} for all i, j.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// One reduced word for w (letters are adjacent-transposition indices).
std::vector<int> reduced_word(const Permutation& w);

// Unordered pair {i, k}, stored with i < k.
struct Transposition {
  int i = 1;
  int k = 2;
  Transposition() = default;
  Transposition(int a, int b);
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
  std::string to_string() const;  // "(1,3)"
};

Permutation to_permutation(const Transposition& t, int n);
// s_i t s_i as a transposition (endpoints mapped through s_i).
Transposition conjugate_by_adjacent(const Transposition& t, int i);

// Subgroup of S_n generated by a set of transpositions, in lexicographic
// order.  Empty generating set gives {identity}.
std::vector<Permutation> subgroup_generated(const std::vector<Transposition>& gens, int n);

// Representatives of the left cosets w<gens>, each the lexicographically
// least member of its coset, listed in lexicographic order.
std::vector<Permutation> coset_representatives(const std::vector<Transposition>& gens, int n);

}  // namespace gkmhess
