#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "gstirling/determinant.hpp"
#include "gstirling/errors.hpp"
#include "gstirling/genstirling.hpp"
#include "gstirling/network.hpp"
#include "gstirling/rational.hpp"
#include "gstirling/sequence.hpp"
#include "gstirling/tri_matrix.hpp"

namespace gstirling {

/// A square minor: strictly increasing rows and cols of equal length.
struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Rational value;
};

struct MinorScanOptions {
  /// Largest minor order examined; unset means every order up to n+1.
  std::optional<std::size_t> max_order;
  /// Worker threads for the row-subset loop; 0 picks hardware concurrency.
  unsigned threads = 1;
};

struct MinorScanReport {
  std::optional<MinorWitness> witness;
  /// Minors whose determinant was computed.
  std::uint64_t evaluated = 0;
  /// Minors skipped because lower-triangularity forces them to vanish.
  std::uint64_t structural_zeros = 0;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> combinations(std::size_t universe, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  if (size > universe) return out;
  std::vector<std::size_t> c(size);
  for (std::size_t i = 0; i < size; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = size;
    while (i > 0 && c[i - 1] == universe - size + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < size; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// A lower-triangular matrix has a vanishing (rows, cols) minor as soon as
// cols[i] > rows[i] for some aligned i.
inline bool structurally_zero(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (cols[i] > rows[i]) return true;
  }
  return false;
}

// The matrix with row m multiplied by the lcm of its denominators, plus the
// multipliers. Minors keep their sign and unscale by the row multipliers.
struct ScaledMatrix {
  std::size_t dim;
  std::vector<mpz_class> ints;
  std::vector<mpz_class> row_scale;

  explicit ScaledMatrix(const TriMatrix& mat) : dim(mat.dim()), ints(dim * dim), row_scale(dim, 1) {
    for (std::size_t m = 0; m < dim; ++m) {
      for (std::size_t k = 0; k <= m; ++k) {
        mpz_lcm(row_scale[m].get_mpz_t(), row_scale[m].get_mpz_t(), mat(m, k).get().get_den_mpz_t());
      }
      for (std::size_t k = 0; k <= m; ++k) {
        ints[m * dim + k] = mat(m, k).get().get_num() * (row_scale[m] / mat(m, k).get().get_den());
      }
    }
  }

  mpz_class minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                  std::vector<mpz_class>& scratch) const {
    const std::size_t size = rows.size();
    scratch.resize(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) scratch[i * size + j] = ints[rows[i] * dim + cols[j]];
    }
    return bareiss_determinant(scratch, size);
  }

  Rational unscale(const mpz_class& det, const std::vector<std::size_t>& rows) const {
    mpz_class scale = 1;
    for (std::size_t r : rows) scale *= row_scale[r];
    return Rational(det, scale);
  }
};

}  // namespace detail

/// Exhaustive total non-negativity test of a lower-triangular matrix.
///
/// Minors are visited by order, then lexicographically by (rows, cols); the
/// witness is the first negative one in that order regardless of thread
/// count. Counters are exact whenever no witness is found.
inline MinorScanReport scan_minors(const TriMatrix& mat, const MinorScanOptions& options = {}) {
  const std::size_t dim = mat.dim();
  const std::size_t max_order = std::min(options.max_order.value_or(dim), dim);
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;

  const detail::ScaledMatrix scaled(mat);
  MinorScanReport report;

  for (std::size_t order = 1; order <= max_order; ++order) {
    const auto subsets = detail::combinations(dim, order);
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best_row{none};
    std::vector<std::optional<MinorWitness>> found(subsets.size());
    std::atomic<std::uint64_t> evaluated{0}, zeros{0};

    auto work = [&](std::size_t first, std::size_t stride) {
      std::vector<mpz_class> scratch;
      std::uint64_t local_eval = 0, local_zero = 0;
      for (std::size_t r = first; r < subsets.size(); r += stride) {
        if (r > best_row.load(std::memory_order_relaxed)) break;
        const auto& rows = subsets[r];
        for (const auto& cols : subsets) {
          if (detail::structurally_zero(rows, cols)) {
            ++local_zero;
            continue;
          }
          ++local_eval;
          const mpz_class det = scaled.minor(rows, cols, scratch);
          if (det < 0) {
            found[r] = MinorWitness{rows, cols, scaled.unscale(det, rows)};
            std::size_t current = best_row.load();
            while (r < current && !best_row.compare_exchange_weak(current, r)) {}
            break;
          }
        }
      }
      evaluated += local_eval;
      zeros += local_zero;
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, subsets.size()));
    if (workers <= 1) {
      work(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
    }
    report.evaluated += evaluated;
    report.structural_zeros += zeros;
    if (best_row != none) {
      report.witness = std::move(found[best_row]);
      return report;
    }
  }
  return report;
}

/// First negative minor (order, then lexicographic), or nothing if the
/// matrix is totally non-negative up to `max_order`.
inline std::optional<MinorWitness> find_negative_minor(const TriMatrix& mat,
                                                       std::optional<std::size_t> max_order = std::nullopt) {
  return scan_minors(mat, {max_order, 1}).witness;
}

/// Entry of an inverse that breaks the checkerboard pattern.
struct SignViolation {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Scans M^{-1} for the first (m,k) with (-1)^{m-k} M^{-1}(m,k) < 0.
/// Zero entries conform.
inline std::optional<SignViolation> inverse_sign_pattern(const TriMatrix& mat) {
  const TriMatrix inv = unit_lower_inverse(mat);
  for (std::size_t m = 0; m <= inv.size(); ++m) {
    for (std::size_t k = 0; k <= m; ++k) {
      if (inv(m, k).sign() * parity_sign(m - k) < 0) return SignViolation{m, k, inv(m, k)};
    }
  }
  return std::nullopt;
}

/// Positions (m,k), m > k, where M^{-1} has a zero entry.
inline std::vector<EntryMismatch> inverse_zero_entries(const TriMatrix& mat) {
  const TriMatrix inv = unit_lower_inverse(mat);
  std::vector<EntryMismatch> zeros;
  for (std::size_t m = 1; m <= inv.size(); ++m) {
    for (std::size_t k = 0; k < m; ++k) {
      if (inv(m, k).is_zero()) zeros.push_back({m, k});
    }
  }
  return zeros;
}

/// A single matrix entry offered as a 1x1 witness.
struct EntryWitness {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Outcome of the restricted-growth decision procedure.
struct TnnVerdict {
  bool tnn = false;
  RgsReport rgs;
  /// Pivot trace; on success its final array is the non-negative certificate.
  PivotTrace trace;
  /// For non-RGS e: entry (j, f(j) - 1) at the first violation j.
  std::optional<EntryWitness> witness;
};

/// Decides total non-negativity of S^{a,e} for non-decreasing a without
/// enumerating minors: a certificate when e is restricted growth, a negative
/// entry otherwise.
inline TnnVerdict decide_tnn(const SequencePair& sp) {
  if (!sp.a_nondecreasing()) {
    throw PreconditionError("decide_tnn requires a non-decreasing sequence a; "
                            "no characterization is known otherwise (use the exhaustive minor scan)");
  }
  TnnVerdict verdict;
  verdict.rgs = rgs_check(sp);
  verdict.trace = certify(sp);
  if (verdict.rgs.is_rgs) {
    if (!verdict.trace.all_nonnegative) {
      throw InconsistencyError("restricted growth input produced a weight array with a negative entry");
    }
    verdict.tnn = true;
    return verdict;
  }
  const RgsViolation& v = *verdict.rgs.violation;
  const TriMatrix s = stirling_recurrence(sp);
  verdict.witness = EntryWitness{v.index, v.level - 1, s(v.index, v.level - 1)};
  return verdict;
}

}  // namespace gstirling
