#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gstirling/errors.hpp"
#include "gstirling/genstirling.hpp"
#include "gstirling/rational.hpp"
#include "gstirling/sequence.hpp"
#include "gstirling/tri_matrix.hpp"

namespace gstirling {

/// Ferrers board given by non-decreasing, non-negative column heights.
/// Column i holds the cells in rows 1..b_i.
class FerrersBoard {
 public:
  FerrersBoard() = default;
  explicit FerrersBoard(std::vector<long> heights) : heights_(std::move(heights)) {
    for (std::size_t i = 0; i < heights_.size(); ++i) {
      if (heights_[i] < 0) throw PreconditionError("column heights must be non-negative");
      if (i > 0 && heights_[i] < heights_[i - 1]) throw PreconditionError("column heights must be non-decreasing");
    }
  }

  std::size_t columns() const noexcept { return heights_.size(); }
  const std::vector<long>& heights() const noexcept { return heights_; }
  long height(std::size_t column) const { return heights_.at(column - 1); }

 private:
  std::vector<long> heights_;
};

inline constexpr std::size_t kMaxRookColumns = 10;

/// R_k(B_m): non-attacking placements of k rooks on the first m columns.
inline std::uint64_t rook_numbers_bruteforce(const FerrersBoard& board, std::size_t m, std::size_t k) {
  if (board.columns() > kMaxRookColumns) {
    throw ResourceError("rook enumeration is capped at " + std::to_string(kMaxRookColumns) + " columns");
  }
  if (m > board.columns()) throw PreconditionError("more columns requested than the board has");
  if (k > m) return 0;
  const long rows = m == 0 ? 0 : board.height(m);
  std::vector<bool> used(static_cast<std::size_t>(rows) + 1, false);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t column, std::size_t placed) -> void {
    if (placed == k) {
      ++count;
      return;
    }
    if (column > m || m - column + 1 < k - placed) return;
    self(self, column + 1, placed);  // column left empty
    for (long r = 1; r <= board.height(column); ++r) {
      if (used[static_cast<std::size_t>(r)]) continue;
      used[static_cast<std::size_t>(r)] = true;
      self(self, column + 1, placed + 1);
      used[static_cast<std::size_t>(r)] = false;
    }
  };
  rec(rec, 1, 0);
  return count;
}

/// Checks sum_k R_{m-k}(B_m) x(x-1)..(x-k+1) = prod_{i<=m} (x + b_i - i + 1)
/// at x = 0..m, enough points to pin a degree-m identity.
inline bool gjw_check(const FerrersBoard& board, std::size_t m) {
  if (board.columns() > kMaxRookColumns) {
    throw ResourceError("rook enumeration is capped at " + std::to_string(kMaxRookColumns) + " columns");
  }
  if (m > board.columns()) throw PreconditionError("more columns requested than the board has");
  std::vector<std::uint64_t> rooks(m + 1);
  for (std::size_t j = 0; j <= m; ++j) rooks[j] = rook_numbers_bruteforce(board, m, j);
  for (long x = 0; x <= static_cast<long>(m); ++x) {
    mpz_class lhs = 0, falling = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      lhs += falling * rooks[m - k];
      falling *= x - static_cast<long>(k);
    }
    mpz_class rhs = 1;
    for (std::size_t i = 1; i <= m; ++i) rhs *= x + board.height(i) - static_cast<long>(i) + 1;
    if (lhs != rhs) return false;
  }
  return true;
}

/// a_i = i - 1 and e_i = i - 1 - b_i.
inline SequencePair rook_sequence_pair(const FerrersBoard& board) {
  std::vector<Rational> a, e;
  for (std::size_t i = 1; i <= board.columns(); ++i) {
    const long shift = static_cast<long>(i) - 1;
    a.emplace_back(shift);
    e.emplace_back(shift - board.height(i));
  }
  return SequencePair(std::move(a), std::move(e));
}

/// Matrix of rook numbers: entry (m,k) = R_{m-k}(B_m).
inline TriMatrix rook_matrix(const FerrersBoard& board) { return stirling_recurrence(rook_sequence_pair(board)); }

}  // namespace gstirling
