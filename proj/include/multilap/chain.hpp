#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "multilap/matrix.hpp"
#include "multilap/multicomplex.hpp"

namespace multilap {

// Matrix of the boundary map d_d : Z M_d -> Z M_{d-1} (rows M_{d-1}, columns M_d),
// or of its dual d_d^* : Z M_{d-1} -> Z M_d when `dual` is set (rows M_d, columns M_{d-1}).
struct BoundaryMatrix {
  Degree degree = 0;
  bool dual = false;
  std::vector<Monomial> rowBasis;
  std::vector<Monomial> colBasis;
  SparseIntMatrix entries;

  std::size_t rows() const noexcept { return entries.rows(); }
  std::size_t cols() const noexcept { return entries.cols(); }
};

// Column of m = x_{i0}^{a0} ... x_{ik}^{ak} (ascending support): for every odd
// a_j, sign (-1)^{a0 + ... + a_{j-1}} in the row of m / x_{ij}. Degree 0 gives
// the zero map into the empty basis; degrees above the top give no columns.
BoundaryMatrix boundaryMatrix(const Multicomplex& m, Degree d);

// Transpose of boundaryMatrix(m, d).
BoundaryMatrix dualBoundaryMatrix(const Multicomplex& m, Degree d);

// The dual built directly from the closed form: the coefficient of x_j t in
// d^*(t) is (-1)^{a_1 + ... + a_{j-1}} when a_j is even and x_j t lies in M.
BoundaryMatrix dualBoundaryClosedForm(const Multicomplex& m, Degree d);

std::vector<std::int64_t> applyBoundary(const BoundaryMatrix& b,
                                        std::span<const std::int64_t> chain);

// d_{d-1} d_d == 0 for every 2 <= d <= maxDegree, by exact integer products.
bool checkBoundarySquareZero(const Multicomplex& m);

// "rows r cols c degree d", legend comment lines, then sorted "row col value" triples.
void writeMatrixDump(std::ostream& out, const BoundaryMatrix& b);

}  // namespace multilap
