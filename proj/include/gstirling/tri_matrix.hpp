#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gstirling/errors.hpp"
#include "gstirling/rational.hpp"

namespace gstirling {

/// Lower-triangular (n+1) x (n+1) exact matrix indexed by 0..n.
///
/// Only the entries with k <= m are stored; reads above the diagonal return
/// zero and writes there are rejected.
class TriMatrix {
 public:
  TriMatrix() : TriMatrix(0) {}
  explicit TriMatrix(std::size_t n) : n_(n), entries_((n + 1) * (n + 2) / 2) {}

  static TriMatrix identity(std::size_t n) {
    TriMatrix id(n);
    for (std::size_t m = 0; m <= n; ++m) id.at(m, m) = 1;
    return id;
  }

  /// Largest row/column index; the matrix has n+1 rows.
  std::size_t size() const noexcept { return n_; }
  std::size_t dim() const noexcept { return n_ + 1; }

  const Rational& operator()(std::size_t m, std::size_t k) const {
    check_row(m);
    if (k > m) return zero();
    return entries_[offset(m, k)];
  }

  Rational& at(std::size_t m, std::size_t k) {
    check_row(m);
    if (k > m) throw std::out_of_range("write above the diagonal of a lower-triangular matrix");
    return entries_[offset(m, k)];
  }

  /// Entries (m,0)..(m,m).
  std::span<const Rational> row(std::size_t m) const {
    check_row(m);
    return {entries_.data() + offset(m, 0), m + 1};
  }

  bool has_unit_diagonal() const {
    for (std::size_t m = 0; m <= n_; ++m) {
      if ((*this)(m, m) != Rational(1)) return false;
    }
    return true;
  }

  /// Leading (n'+1) x (n'+1) block.
  TriMatrix leading(std::size_t n) const {
    if (n > n_) throw PreconditionError("leading block larger than the matrix");
    TriMatrix out(n);
    for (std::size_t m = 0; m <= n; ++m) {
      for (std::size_t k = 0; k <= m; ++k) out.at(m, k) = (*this)(m, k);
    }
    return out;
  }

  friend bool operator==(const TriMatrix& x, const TriMatrix& y) {
    return x.n_ == y.n_ && x.entries_ == y.entries_;
  }

  friend TriMatrix operator*(const TriMatrix& x, const TriMatrix& y) {
    if (x.n_ != y.n_) throw PreconditionError("matrix size mismatch in product");
    TriMatrix out(x.n_);
    for (std::size_t m = 0; m <= x.n_; ++m) {
      for (std::size_t k = 0; k <= m; ++k) {
        Rational sum;
        for (std::size_t j = k; j <= m; ++j) sum += x(m, j) * y(j, k);
        out.at(m, k) = std::move(sum);
      }
    }
    return out;
  }

 private:
  static std::size_t offset(std::size_t m, std::size_t k) { return m * (m + 1) / 2 + k; }

  void check_row(std::size_t m) const {
    if (m > n_) throw std::out_of_range("row " + std::to_string(m) + " outside 0.." + std::to_string(n_));
  }

  static const Rational& zero() {
    static const Rational z;
    return z;
  }

  std::size_t n_;
  std::vector<Rational> entries_;
};

/// Inverse of a unit lower-triangular matrix by forward substitution.
inline TriMatrix unit_lower_inverse(const TriMatrix& mat) {
  if (!mat.has_unit_diagonal()) throw PreconditionError("matrix is not unit lower-triangular");
  const std::size_t n = mat.size();
  TriMatrix inv(n);
  for (std::size_t k = 0; k <= n; ++k) {
    inv.at(k, k) = 1;
    for (std::size_t m = k + 1; m <= n; ++m) {
      Rational sum;
      for (std::size_t j = k; j < m; ++j) sum += mat(m, j) * inv(j, k);
      inv.at(m, k) = -sum;
    }
  }
  return inv;
}

/// First position (row-major) where the two matrices differ.
struct EntryMismatch {
  std::size_t row;
  std::size_t col;
};

inline std::optional<EntryMismatch> first_mismatch(const TriMatrix& x, const TriMatrix& y) {
  if (x.size() != y.size()) return EntryMismatch{0, 0};
  for (std::size_t m = 0; m <= x.size(); ++m) {
    for (std::size_t k = 0; k <= m; ++k) {
      if (x(m, k) != y(m, k)) return EntryMismatch{m, k};
    }
  }
  return std::nullopt;
}

}  // namespace gstirling
