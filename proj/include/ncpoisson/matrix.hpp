#pragma once

#include <cstddef>
#include <vector>

#include "ncpoisson/scalar.hpp"

namespace ncpoisson {

/// Dense row-major rational matrix; the column count travels separately
/// so zero-row matrices keep a well-defined domain.
using Matrix = std::vector<std::vector<Scalar>>;

struct RankKernel {
  size_t rank = 0;
  /// Basis of {x : Mx = 0}, one vector per free column, normalized with
  /// a 1 in its free column and 0 in every other free column.  Ordered
  /// by free-column index, so the output is deterministic.
  std::vector<std::vector<Scalar>> kernel;
};

/// Exact rank and right-kernel basis.  Rows are scaled integral first and
/// reduced by fraction-free (Bareiss) elimination, so intermediate values
/// stay integers; the kernel back-substitution is exact rational.
RankKernel rank_kernel(const Matrix& rows, size_t cols);

size_t rank(const Matrix& rows, size_t cols);

Matrix transpose(const Matrix& rows, size_t cols);

/// Matrix-vector product; raises InvalidInput on shape mismatch.
std::vector<Scalar> apply(const Matrix& rows, const std::vector<Scalar>& x);

} // namespace ncpoisson
