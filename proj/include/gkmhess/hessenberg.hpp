// Hessenberg functions h: {1..n} -> {1..n} and the transposition condition
// sets C(h) they induce, together with the stability notions that drive the
// direct-sum decompositions.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gkmhess/permutation.hpp"

namespace gkmhess {

class HessenbergFunction {
public:
  // values[i-1] = h(i); requires i <= h(i) <= n and h nondecreasing.
  explicit HessenbergFunction(std::vector<int> values);

  static HessenbergFunction full(int n);      // h = [n, n, .., n]
  static HessenbergFunction smallest(int n);  // h = [1, 2, .., n]
  // All Hessenberg functions on {1..n}, in lexicographic order.
  static std::vector<HessenbergFunction> all(int n);

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const;
  const std::vector<int>& values() const { return values_; }

  std::string to_string() const;  // "[2,3,3]"
  static HessenbergFunction parse(const std::string& text);

  friend auto operator<=>(const HessenbergFunction&, const HessenbergFunction&) = default;

private:
  std::vector<int> values_;
};

// A finite set of transposition conditions on rank-n elements.
class ConditionSet {
public:
  ConditionSet(int n, std::set<Transposition> conditions);

  int n() const { return n_; }
  const std::set<Transposition>& conditions() const { return conditions_; }
  bool contains(const Transposition& t) const { return conditions_.count(t) > 0; }
  bool contains_adjacent(int i) const { return contains(Transposition(i, i + 1)); }

  ConditionSet with(const Transposition& t) const;
  ConditionSet without(const Transposition& t) const;
  // s_i C s_i elementwise.
  ConditionSet conjugated_by_adjacent(int i) const;

  std::string to_string() const;  // "{(1,2),(2,3)}"
  friend auto operator<=>(const ConditionSet&, const ConditionSet&) = default;

private:
  int n_;
  std::set<Transposition> conditions_;
};

// C(h) = { (i,k) : i < k <= h(i) }.
ConditionSet hessenberg_conditions(const HessenbergFunction& h);

// Inverse of hessenberg_conditions when C is Hessenberg-shaped, else nullopt.
std::optional<HessenbergFunction> conditions_to_hessenberg(const ConditionSet& C);

// C is s_i-stable: s_i in C and s_i C s_i = C.
bool is_stable(const ConditionSet& C, int i);

// When C is almost-s_i-stable (s_i in C and exactly one member escapes under
// conjugation by s_i) returns that witness; otherwise nullopt.
std::optional<Transposition> almost_stable_witness(const ConditionSet& C, int i);

}  // namespace gkmhess
