#pragma once

#include <stdexcept>
#include <string>

#include "omegatt/computad.hpp"

namespace omegatt {

/// The k-composition coherence of an n-cell with an m-cell, over free Pos(comp_tree(n, k, m)).
/// Memoized; throws std::invalid_argument unless 0 <= k < min(n, m).
Cell comp_cell(int n, int k, int m);

/// Sends the positions of disk_tree(dim c) onto c and its iterated boundaries.
Substitution disk_map(Computad const& c, Cell const& cell);

/// Coh(disk_tree(n), (d_n, d_n), disk map of c); its boundary is (c, c).
Cell identity_cell(Computad const& c, Cell const& cell);

class BoundaryMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The k-composite of two cells; requires tgt_k(lhs) = src_k(rhs).
Cell compose(Computad const& c, Cell const& lhs, int k, Cell const& rhs);

/// One 0-generator x and two 2-generators a, b : id(x) -> id(x), pointed at (x, x).
BipointedComputad eh_computad();

}  // namespace omegatt
