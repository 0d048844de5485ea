#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gstirling/errors.hpp"
#include "gstirling/genstirling.hpp"
#include "gstirling/rational.hpp"
#include "gstirling/sequence.hpp"
#include "gstirling/tri_matrix.hpp"

// The network is the fixed planar grid: horizontal lines 0..n run left to
// right from source s_i to sink t_i, and vertical column j (1..n) runs upward
// with one edge [m,j] from line m to line m-1 for every m >= j. Horizontal
// edges carry weight 1; the vertical edge weights form a WeightArray.

namespace gstirling {

/// Position [m,k] of a weight array (1 <= k <= m).
struct Position {
  std::size_t m;
  std::size_t k;
  friend bool operator==(const Position&, const Position&) = default;
};

/// True when `pos` lies in the triangle headed at `head`.
inline bool in_triangle(const Position& head, const Position& pos) {
  return pos.m >= head.m && pos.k >= head.k && pos.k - head.k <= pos.m - head.m;
}

/// Records that a weight equals a_{a_index} - e_{e_index}.
struct WeightLabel {
  std::size_t a_index;
  std::size_t e_index;
  friend bool operator==(const WeightLabel&, const WeightLabel&) = default;
};

/// Lower-triangular array of vertical-edge weights x_{mk}, 1 <= k <= m <= n.
///
/// Arrays built from a SequencePair also carry a label per position; pivoting
/// permutes labels, and values are always recomputed from them.
class WeightArray {
 public:
  explicit WeightArray(std::size_t n = 0) : n_(n), values_(n * (n + 1) / 2) {}

  /// Rows 1..n given as rows[m-1] with m entries each.
  static WeightArray from_rows(const std::vector<std::vector<Rational>>& rows) {
    WeightArray wa(rows.size());
    for (std::size_t m = 1; m <= rows.size(); ++m) {
      if (rows[m - 1].size() != m) throw PreconditionError("weight array row " + std::to_string(m) + " must have " + std::to_string(m) + " entries");
      for (std::size_t k = 1; k <= m; ++k) wa.values_[offset(m, k)] = rows[m - 1][k - 1];
    }
    return wa;
  }

  static WeightArray labelled(const SequencePair& sp, std::vector<WeightLabel> labels) {
    const std::size_t n = sp.size();
    if (labels.size() != n * (n + 1) / 2) throw PreconditionError("label count does not match the array size");
    WeightArray wa(n);
    wa.source_ = sp;
    wa.labels_ = std::move(labels);
    wa.recompute();
    return wa;
  }

  std::size_t size() const noexcept { return n_; }

  const Rational& operator()(std::size_t m, std::size_t k) const { return values_[checked(m, k)]; }

  /// Overwrites a value; the array loses its labels.
  void set(std::size_t m, std::size_t k, Rational value) {
    values_[checked(m, k)] = std::move(value);
    labels_.clear();
    source_.reset();
  }

  bool has_labels() const noexcept { return source_.has_value(); }
  const WeightLabel& label(std::size_t m, std::size_t k) const {
    if (!has_labels()) throw PreconditionError("weight array carries no (a,e) labels");
    return labels_[checked(m, k)];
  }
  const std::optional<SequencePair>& source() const noexcept { return source_; }

  bool all_nonnegative() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v.sign() >= 0; });
  }

  /// First negative weight in row-major order.
  std::optional<Position> first_negative() const {
    for (std::size_t m = 1; m <= n_; ++m) {
      for (std::size_t k = 1; k <= m; ++k) {
        if ((*this)(m, k).sign() < 0) return Position{m, k};
      }
    }
    return std::nullopt;
  }

  friend bool operator==(const WeightArray& x, const WeightArray& y) {
    return x.n_ == y.n_ && x.values_ == y.values_ && x.labels_ == y.labels_;
  }

 private:
  friend WeightArray pivot(const WeightArray&, std::size_t, std::size_t);

  static std::size_t offset(std::size_t m, std::size_t k) { return (m - 1) * m / 2 + (k - 1); }

  std::size_t checked(std::size_t m, std::size_t k) const {
    if (k < 1 || k > m || m > n_) {
      throw std::out_of_range("weight position [" + std::to_string(m) + "," + std::to_string(k) + "] outside the array");
    }
    return offset(m, k);
  }

  void recompute() {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      values_[i] = source_->a(labels_[i].a_index) - source_->e(labels_[i].e_index);
    }
  }

  std::size_t n_;
  std::vector<Rational> values_;
  std::vector<WeightLabel> labels_;
  std::optional<SequencePair> source_;
};

/// Initial array: x_{mk} = a_k - e_{m-k+1}, whose path matrix is S^{a,e}.
inline WeightArray build_initial(const SequencePair& sp) {
  const std::size_t n = sp.size();
  std::vector<WeightLabel> labels;
  labels.reserve(n * (n + 1) / 2);
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 1; k <= m; ++k) labels.push_back({k, m - k + 1});
  }
  return WeightArray::labelled(sp, std::move(labels));
}

/// Path matrix: entry (m,k) sums the weights of all s_m -> t_k paths.
///
/// For each source the weights reaching every line are swept column by
/// column; climbing column j from line i+1 to line i multiplies by x_{i+1,j}.
inline TriMatrix path_matrix(const WeightArray& wa) {
  const std::size_t n = wa.size();
  TriMatrix out(n);
  std::vector<Rational> reach(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    std::fill(reach.begin(), reach.end(), Rational());
    reach[m] = 1;
    for (std::size_t j = 1; j <= std::min(m, n); ++j) {
      for (std::size_t line = m; line-- > j - 1;) {
        reach[line] += wa(line + 1, j) * reach[line + 1];
      }
    }
    for (std::size_t k = 0; k <= m; ++k) out.at(m, k) = reach[k];
  }
  return out;
}

/// One s_m -> t_k path: composition[j-1] vertical steps are taken on column j.
struct PathTerm {
  std::vector<std::size_t> composition;
  Rational weight;
};

namespace detail {

template <typename Visit>
void for_each_composition(std::size_t total, std::size_t parts, Visit&& visit) {
  std::vector<std::size_t> comp(parts, 0);
  // Lexicographically descending: (total,0,..,0) first.
  auto rec = [&](auto&& self, std::size_t index, std::size_t remaining) -> void {
    if (index + 1 == parts) {
      comp[index] = remaining;
      visit(comp);
      return;
    }
    for (std::size_t take = remaining + 1; take-- > 0;) {
      comp[index] = take;
      self(self, index + 1, remaining - take);
    }
  };
  if (parts == 0) {
    if (total == 0) visit(comp);
    return;
  }
  rec(rec, 0, total);
}

inline Rational composition_weight(const WeightArray& wa, std::size_t m, const std::vector<std::size_t>& comp) {
  Rational w = 1;
  std::size_t line = m;
  for (std::size_t j = 1; j <= comp.size(); ++j) {
    for (std::size_t step = 0; step < comp[j - 1]; ++step, --line) w *= wa(line, j);
  }
  return w;
}

// Intersection nodes visited by the path, as ids line * n + (column - 1).
inline std::vector<std::size_t> composition_nodes(std::size_t n, std::size_t m, const std::vector<std::size_t>& comp) {
  std::vector<std::size_t> nodes;
  std::size_t line = m;
  for (std::size_t j = 1; j <= comp.size() && j <= n; ++j) {
    nodes.push_back(line * n + (j - 1));
    for (std::size_t step = 0; step < comp[j - 1]; ++step) {
      --line;
      nodes.push_back(line * n + (j - 1));
    }
  }
  return nodes;
}

}  // namespace detail

/// All C(m, m-k) paths from s_m to t_k with their weights.
inline std::vector<PathTerm> enumerate_paths(const WeightArray& wa, std::size_t m, std::size_t k) {
  if (k > m || m > wa.size()) throw PreconditionError("enumerate_paths requires 0 <= k <= m <= n");
  std::vector<PathTerm> out;
  detail::for_each_composition(m - k, k + 1, [&](const std::vector<std::size_t>& comp) {
    out.push_back({comp, detail::composition_weight(wa, m, comp)});
  });
  return out;
}

/// Total weight and number of vertex-disjoint families pairing sources[i]
/// with sinks[i].
struct FamilySum {
  Rational weight;
  std::uint64_t families = 0;
};

/// Sums over path families joining sources[i] to sinks[i] (pairing taken as
/// given, not sorted) that share no network vertex.
inline FamilySum disjoint_families(const WeightArray& wa, std::span<const std::size_t> sources,
                                   std::span<const std::size_t> sinks) {
  if (sources.size() != sinks.size()) throw PreconditionError("source and sink counts differ");
  const std::size_t n = wa.size();
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (sources[i] > n || sinks[i] > n) throw PreconditionError("source or sink index outside 0..n");
  }

  struct Candidate {
    std::vector<std::uint64_t> mask;
    Rational weight;
  };
  const std::size_t words = ((n + 1) * std::max<std::size_t>(n, 1) + 63) / 64;
  std::vector<std::vector<Candidate>> options(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (sinks[i] > sources[i]) return {};
    for (PathTerm& term : enumerate_paths(wa, sources[i], sinks[i])) {
      Candidate c{std::vector<std::uint64_t>(words, 0), std::move(term.weight)};
      for (std::size_t node : detail::composition_nodes(n, sources[i], term.composition)) {
        c.mask[node / 64] |= std::uint64_t{1} << (node % 64);
      }
      options[i].push_back(std::move(c));
    }
  }

  FamilySum result;
  std::vector<std::uint64_t> used(words, 0);
  auto rec = [&](auto&& self, std::size_t index, const Rational& weight) -> void {
    if (index == options.size()) {
      result.weight += weight;
      ++result.families;
      return;
    }
    for (const Candidate& c : options[index]) {
      bool clash = false;
      for (std::size_t w = 0; w < words && !clash; ++w) clash = (used[w] & c.mask[w]) != 0;
      if (clash) continue;
      for (std::size_t w = 0; w < words; ++w) used[w] |= c.mask[w];
      self(self, index + 1, weight * c.weight);
      for (std::size_t w = 0; w < words; ++w) used[w] &= ~c.mask[w];
    }
  };
  rec(rec, 0, Rational(1));
  return result;
}

/// Minor of the path matrix on rows I and columns J, computed as the weight
/// of vertex-disjoint path families from {s_i : i in I} to {t_j : j in J}.
/// Only the order-preserving pairing can be disjoint in this planar grid.
inline Rational lindstrom_minor(const WeightArray& wa, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  if (rows.empty() || rows.size() != cols.size()) throw PreconditionError("lindstrom_minor needs |I| = |J| >= 1");
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end() ||
      std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
    throw PreconditionError("lindstrom_minor indices must be distinct");
  }
  return disjoint_families(wa, rows, cols).weight;
}

/// Pivoting on [m,k]: for every l >= 1 the e-labels of positions
/// [m+l, k..k+l] rotate one place right (the last moves to the front);
/// a-labels and every other position stay put.
inline WeightArray pivot(const WeightArray& wa, std::size_t m, std::size_t k) {
  if (!wa.has_labels()) throw PreconditionError("pivoting needs an (a,e)-labelled weight array");
  if (k < 1 || k > m || m > wa.size()) {
    throw PreconditionError("pivot position [" + std::to_string(m) + "," + std::to_string(k) + "] outside the array");
  }
  WeightArray out = wa;
  for (std::size_t row = m + 1; row <= wa.size(); ++row) {
    const std::size_t span = row - m;
    const std::size_t carried = wa.label(row, k + span).e_index;
    for (std::size_t col = k + span; col > k; --col) {
      out.labels_[WeightArray::offset(row, col)].e_index = wa.label(row, col - 1).e_index;
    }
    out.labels_[WeightArray::offset(row, k)].e_index = carried;
  }
  out.recompute();
  return out;
}

/// Output of the pivot-sequence construction.
struct PivotTrace {
  std::vector<Position> pivots;
  WeightArray final;
  bool all_nonnegative = false;
  /// Where the scan stopped on an e value above its cap.
  std::optional<RgsViolation> violation;
};

/// Turns the initial array into one with non-negative weights by pivoting.
///
/// A cap pointer l starts at 1; scanning rows j in order, e_j below a_l is
/// skipped, e_j = a_l triggers a pivot on [j, l] (a zero weight) and advances
/// l, and e_j > a_l stops the scan.
inline PivotTrace certify(const SequencePair& sp) {
  if (!sp.a_nondecreasing()) throw PreconditionError("certify requires a non-decreasing sequence a");
  PivotTrace trace;
  trace.final = build_initial(sp);
  std::size_t level = 1;
  for (std::size_t j = 1; j <= sp.size(); ++j) {
    const Rational& cap = sp.a(level);
    if (sp.e(j) > cap) {
      trace.violation = RgsViolation{j, level};
      break;
    }
    if (sp.e(j) == cap) {
      if (!trace.final(j, level).is_zero()) {
        throw InconsistencyError("pivot weight at [" + std::to_string(j) + "," + std::to_string(level) + "] is not zero");
      }
      trace.final = pivot(trace.final, j, level);
      trace.pivots.push_back({j, level});
      ++level;
    }
  }
  trace.all_nonnegative = trace.final.all_nonnegative();
  return trace;
}

}  // namespace gstirling
