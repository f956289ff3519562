// Incremental exact row echelon over the rationals, for the linear systems
// behind basis construction and divisibility cross-checks.
//
// Rows are sparse maps column -> coefficient; column `cols` is the
// right-hand side.  Equations may be inserted in any order: the pivot
// column set of the accumulated row space is canonical, so the solution
// with free variables pinned to zero does not depend on insertion order.
#pragma once

#include <map>
#include <vector>

#include "gkmhess/polynomial.hpp"

namespace gkmhess {

class LinearSystem {
public:
  explicit LinearSystem(int cols) : cols_(cols) {}

  // Insert one equation (sum of coeff * unknown = rhs).  Returns false when
  // the equation is inconsistent with those already inserted.
  bool add_equation(std::map<int, Rational> row, Rational rhs);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  // Solution with every free variable set to zero.  Only valid when every
  // add_equation call returned true.
  std::vector<Rational> solve() const;

private:
  int cols_;
  // pivot column -> reduced row (pivot coefficient normalized to 1;
  // the entry at column cols_ is the right-hand side).
  std::map<int, std::map<int, Rational>> rows_;
};

}  // namespace gkmhess
