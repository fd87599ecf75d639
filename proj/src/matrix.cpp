#include "ncpoisson/matrix.hpp"

#include <gmpxx.h>

#include "ncpoisson/errors.hpp"

namespace ncpoisson {

namespace {

void check_shape(const Matrix& rows, size_t cols) {
  for (const auto& row : rows) {
    if (row.size() != cols) {
      raise("InvalidInput", "matrix row width does not match the declared column count");
    }
  }
}

} // namespace

RankKernel rank_kernel(const Matrix& rows, size_t cols) {
  check_shape(rows, cols);

  // Scale every row to integers; row scaling changes neither rank nor
  // kernel.
  std::vector<std::vector<mpz_class>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    mpz_class lcm_den(1);
    for (const auto& v : row) {
      mpz_class den = v.value().get_den();
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> scaled;
    scaled.reserve(cols);
    for (const auto& v : row) {
      mpq_class q = v.value() * mpq_class(lcm_den);
      scaled.push_back(q.get_num());
    }
    a.push_back(std::move(scaled));
  }

  // Fraction-free elimination with row-major first-nonzero pivoting.
  std::vector<size_t> pivot_cols;
  mpz_class prev_pivot(1);
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < a.size(); ++col) {
    size_t found = a.size();
    for (size_t r = pivot_row; r < a.size(); ++r) {
      if (a[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found == a.size()) continue;
    std::swap(a[pivot_row], a[found]);
    const mpz_class pivot = a[pivot_row][col];
    for (size_t r = pivot_row + 1; r < a.size(); ++r) {
      const mpz_class factor = a[r][col];
      for (size_t j = 0; j < cols; ++j) {
        mpz_class next = pivot * a[r][j] - factor * a[pivot_row][j];
        // Exact by the Sylvester identity underlying Bareiss reduction.
        a[r][j] = next / prev_pivot;
      }
    }
    prev_pivot = pivot;
    pivot_cols.push_back(col);
    ++pivot_row;
  }

  RankKernel out;
  out.rank = pivot_cols.size();

  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_cols) is_pivot[c] = true;

  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> x(cols, Scalar(0));
    x[free_col] = Scalar(1);
    // Echelon rows are solved bottom-up for the pivot variables.
    for (size_t k = pivot_cols.size(); k-- > 0;) {
      const size_t pcol = pivot_cols[k];
      Scalar acc(0);
      for (size_t j = pcol + 1; j < cols; ++j) {
        if (a[k][j] != 0) acc += Scalar(mpq_class(a[k][j])) * x[j];
      }
      x[pcol] = -(acc / Scalar(mpq_class(a[k][pcol])));
    }
    out.kernel.push_back(std::move(x));
  }
  return out;
}

size_t rank(const Matrix& rows, size_t cols) { return rank_kernel(rows, cols).rank; }

Matrix transpose(const Matrix& rows, size_t cols) {
  check_shape(rows, cols);
  Matrix out(cols, std::vector<Scalar>(rows.size(), Scalar(0)));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < cols; ++j) out[j][i] = rows[i][j];
  }
  return out;
}

std::vector<Scalar> apply(const Matrix& rows, const std::vector<Scalar>& x) {
  std::vector<Scalar> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != x.size()) {
      raise("InvalidInput", "matrix-vector shape mismatch");
    }
    Scalar acc(0);
    for (size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
    out.push_back(acc);
  }
  return out;
}

} // namespace ncpoisson
