// Schubert and double Schubert polynomials by descending divided-difference
// recursion from the longest element, with path independence asserted.
#pragma once

#include <map>

#include "gkmhess/polynomial.hpp"
#include "gkmhess/report.hpp"

namespace gkmhess {

// Divided difference on Q[t.., x..]: (p - permute_x_vars(p, s_i)) divided by
// x_i - x_{i+1}.  Always exact; throws std::logic_error if division fails.
Polynomial poly_divided_difference(int i, const Polynomial& p);

struct SchubertTable {
  int n = 0;
  // Values live in tx_vars(n); single-polynomial entries use only the
  // x-variables.
  std::map<Permutation, Polynomial> entries;
};

// Top entry x1^{n-1} x2^{n-2} .. x_{n-1}; every other entry is obtained by
// applying the divided difference along any descent path, and all paths are
// checked to agree.
SchubertTable schubert_table(int n);

// Top entry prod_{i+k <= n} (x_i - t_k); same recursion and the same path
// independence check.  Setting every t to zero recovers schubert_table.
SchubertTable double_schubert_table(int n);

// For the full flag condition set at rank n: the vertexwise image of each
// double Schubert polynomial vanishes below its indexing permutation in
// Bruhat order and takes the prescribed flow-up diagonal value there.
RunReport double_schubert_flow_up_check(int n);

}  // namespace gkmhess
