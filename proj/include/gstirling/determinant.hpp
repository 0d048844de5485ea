#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gstirling/errors.hpp"
#include "gstirling/rational.hpp"
#include "gstirling/tri_matrix.hpp"

namespace gstirling {

/// Determinant of a size x size integer matrix (row-major, consumed in place)
/// by fraction-free Bareiss elimination. Every division is exact.
inline mpz_class bareiss_determinant(std::vector<mpz_class>& a, std::size_t size) {
  if (size == 0) return 1;
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * size + c]; };
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == size) return 0;
      for (std::size_t c = 0; c < size; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
    }
    prev = at(k, k);
  }
  mpz_class det = at(size - 1, size - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

/// Determinant of a dense rational matrix: each row is scaled by the lcm of
/// its denominators, the integer determinant is taken, then unscaled.
inline Rational determinant(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t size = rows.size();
  std::vector<mpz_class> ints(size * size);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < size; ++r) {
    if (rows[r].size() != size) throw PreconditionError("determinant of a non-square matrix");
    mpz_class row_lcm = 1;
    for (const Rational& x : rows[r]) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), x.get().get_den_mpz_t());
    for (std::size_t c = 0; c < size; ++c) {
      ints[r * size + c] = rows[r][c].get().get_num() * (row_lcm / rows[r][c].get().get_den());
    }
    scale *= row_lcm;
  }
  return Rational(bareiss_determinant(ints, size), scale);
}

/// Determinant of the submatrix of `mat` on the given rows and columns.
inline Rational submatrix_determinant(const TriMatrix& mat, std::span<const std::size_t> rows,
                                      std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw PreconditionError("minor with unequal row and column counts");
  std::vector<std::vector<Rational>> sub(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = mat(rows[i], cols[j]);
  }
  return determinant(sub);
}

}  // namespace gstirling
