#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gstirling/errors.hpp"
#include "gstirling/rational.hpp"
#include "gstirling/sequence.hpp"
#include "gstirling/tri_matrix.hpp"

namespace gstirling {

// ---------------------------------------------------------------------------
// Restricted growth relative to a non-decreasing a.
// ---------------------------------------------------------------------------

struct RgsViolation {
  std::size_t index;  ///< first j with e_j > a_{f(j)} (1-based)
  std::size_t level;  ///< f(j) at that moment
};

struct RgsReport {
  bool is_rgs = true;
  /// f(1)..f(n). Updates stop at a violation; later entries repeat f(j).
  std::vector<std::size_t> cap_indices;
  std::optional<RgsViolation> violation;
};

/// Runs the moving-cap rule: f(1) = 1, and f advances by one exactly when
/// e_i hits its cap a_{f(i)}.
inline RgsReport rgs_check(const SequencePair& sp) {
  if (!sp.a_nondecreasing()) throw PreconditionError("rgs_check requires a non-decreasing sequence a");
  RgsReport report;
  report.cap_indices.reserve(sp.size());
  std::size_t level = 1;
  for (std::size_t i = 1; i <= sp.size(); ++i) {
    report.cap_indices.push_back(level);
    if (report.violation) continue;
    const Rational& cap = sp.a(level);
    if (sp.e(i) > cap) {
      report.is_rgs = false;
      report.violation = RgsViolation{i, level};
    } else if (sp.e(i) == cap) {
      ++level;
    }
  }
  return report;
}

/// Classical restricted growth string: e_1 = 0 and e_{i+1} <= 1 + max(e_1..e_i).
inline bool rgs_check_integer(const std::vector<long>& e) {
  long running_max = -1;
  for (long v : e) {
    if (v < 0 || v > running_max + 1) return false;
    if (v > running_max) running_max = v;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Four constructions of S^{a,e} and the signed inverse.
// ---------------------------------------------------------------------------

/// S(m,k) = S(m-1,k-1) + (a_{k+1} - e_m) S(m-1,k), with S(m,m) = 1 and
/// S(m,0) = prod_{i<=m} (a_1 - e_i).
inline TriMatrix stirling_recurrence(const SequencePair& sp) {
  const std::size_t n = sp.size();
  TriMatrix s(n);
  s.at(0, 0) = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    s.at(m, m) = 1;
    s.at(m, 0) = s(m - 1, 0) * (sp.a(1) - sp.e(m));
    for (std::size_t k = 1; k < m; ++k) {
      s.at(m, k) = s(m - 1, k - 1) + (sp.a(k + 1) - sp.e(m)) * s(m - 1, k);
    }
  }
  return s;
}

enum class SubsetMethod {
  dynamic,    ///< take/skip DP over the index s, O(n^2) per row
  enumerate,  ///< visits every subset explicitly; slow reference
};

namespace detail {

// Sums, over subsets {s_1 < ... < s_j} of {1..m}, the product of
// factor(s_i, i - 1). Returns sums[j] for j = 0..m.
template <typename Factor>
std::vector<Rational> subset_product_sums_dp(std::size_t m, Factor factor) {
  std::vector<Rational> sums(m + 1);
  sums[0] = 1;
  for (std::size_t s = 1; s <= m; ++s) {
    for (std::size_t taken = s; taken >= 1; --taken) {
      sums[taken] += sums[taken - 1] * factor(s, taken - 1);
    }
  }
  return sums;
}

template <typename Factor>
std::vector<Rational> subset_product_sums_enum(std::size_t m, Factor factor) {
  std::vector<Rational> sums(m + 1);
  std::vector<std::size_t> subset;
  subset.reserve(m);
  for (std::size_t size = 0; size <= m; ++size) {
    // Lexicographic walk over size-subsets of {1..m}.
    subset.resize(size);
    for (std::size_t i = 0; i < size; ++i) subset[i] = i + 1;
    while (true) {
      Rational product = 1;
      for (std::size_t i = 0; i < size; ++i) product *= factor(subset[i], i);
      sums[size] += product;
      std::size_t i = size;
      while (i > 0 && subset[i - 1] == m - size + i) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return sums;
}

template <typename Factor>
std::vector<Rational> subset_product_sums(std::size_t m, SubsetMethod method, Factor factor) {
  return method == SubsetMethod::dynamic ? subset_product_sums_dp(m, factor)
                                         : subset_product_sums_enum(m, factor);
}

}  // namespace detail

/// S(m,k) = sum over (m-k)-subsets {s_1<...<s_{m-k}} of {1..m} of
/// prod_i (a_{s_i-i+1} - e_{s_i}).
inline TriMatrix stirling_explicit(const SequencePair& sp, SubsetMethod method = SubsetMethod::dynamic) {
  const std::size_t n = sp.size();
  TriMatrix s(n);
  for (std::size_t m = 0; m <= n; ++m) {
    // `before` = i - 1, the number of smaller elements already chosen.
    const auto sums = detail::subset_product_sums(
        m, method, [&](std::size_t idx, std::size_t before) { return sp.a(idx - before) - sp.e(idx); });
    for (std::size_t k = 0; k <= m; ++k) s.at(m, k) = sums[m - k];
  }
  return s;
}

/// Entry (m,k) of the inverse: (-1)^{m-k} times the sum over (m-k)-subsets of
/// prod_i (a_{s_i} - e_{s_i-i+1}).
inline TriMatrix stirling_inverse_explicit(const SequencePair& sp, SubsetMethod method = SubsetMethod::dynamic) {
  const std::size_t n = sp.size();
  TriMatrix s(n);
  for (std::size_t m = 0; m <= n; ++m) {
    const auto sums = detail::subset_product_sums(
        m, method, [&](std::size_t idx, std::size_t before) { return sp.a(idx) - sp.e(idx - before); });
    for (std::size_t k = 0; k <= m; ++k) {
      s.at(m, k) = parity_sign(m - k) == 1 ? sums[m - k] : -sums[m - k];
    }
  }
  return s;
}

/// h_d(x_1..x_t) for every prefix length t and degree d <= max_degree:
/// table[t][d].
inline std::vector<std::vector<Rational>> complete_symmetric_table(const std::vector<Rational>& xs,
                                                                   std::size_t max_degree) {
  std::vector<std::vector<Rational>> h(xs.size() + 1, std::vector<Rational>(max_degree + 1));
  h[0][0] = 1;
  for (std::size_t t = 1; t <= xs.size(); ++t) {
    h[t][0] = 1;
    for (std::size_t d = 1; d <= max_degree; ++d) h[t][d] = h[t - 1][d] + xs[t - 1] * h[t][d - 1];
  }
  return h;
}

/// s_d(x_1..x_t) for every prefix length t and degree d <= t: table[t][d].
inline std::vector<std::vector<Rational>> elementary_symmetric_table(const std::vector<Rational>& xs) {
  std::vector<std::vector<Rational>> s(xs.size() + 1);
  s[0] = {Rational(1)};
  for (std::size_t t = 1; t <= xs.size(); ++t) {
    s[t].assign(t + 1, Rational());
    for (std::size_t d = 0; d <= t; ++d) {
      if (d < t) s[t][d] += s[t - 1][d];
      if (d > 0) s[t][d] += xs[t - 1] * s[t - 1][d - 1];
    }
  }
  return s;
}

/// S(m,k) = sum_{l=0}^{m-k} (-1)^l h_{m-k-l}(a_1..a_{k+1}) s_l(e_1..e_m).
inline TriMatrix stirling_symmetric(const SequencePair& sp) {
  const std::size_t n = sp.size();
  const auto h = complete_symmetric_table(sp.a(), n);
  const auto el = elementary_symmetric_table(sp.e());
  TriMatrix s(n);
  for (std::size_t m = 0; m <= n; ++m) {
    for (std::size_t k = 0; k <= m; ++k) {
      // For k = n only h_0 = 1 is needed, so a_{n+1} never has to exist.
      const std::size_t vars = std::min(k + 1, n);
      Rational sum;
      for (std::size_t l = 0; l <= m - k; ++l) {
        const Rational term = h[vars][m - k - l] * el[m][l];
        if (l % 2 == 0) sum += term;
        else sum -= term;
      }
      s.at(m, k) = std::move(sum);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Presets.
// ---------------------------------------------------------------------------

enum class Preset { binomial, stirling1, stirling2, lah };

inline Preset parse_preset(std::string_view name) {
  if (name == "binomial") return Preset::binomial;
  if (name == "stirling1") return Preset::stirling1;
  if (name == "stirling2") return Preset::stirling2;
  if (name == "lah") return Preset::lah;
  throw UsageError("unknown preset '" + std::string(name) + "' (expected binomial|stirling1|stirling2|lah)");
}

inline std::string_view preset_name(Preset p) {
  switch (p) {
    case Preset::binomial: return "binomial";
    case Preset::stirling1: return "stirling1";
    case Preset::stirling2: return "stirling2";
    case Preset::lah: return "lah";
  }
  return "";
}

inline SequencePair preset(Preset p, std::size_t n) {
  std::vector<Rational> a(n), e(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const long shift = static_cast<long>(i) - 1;
    switch (p) {
      case Preset::binomial: a[i - 1] = 0; e[i - 1] = -1; break;
      case Preset::stirling2: a[i - 1] = shift; e[i - 1] = 0; break;
      case Preset::stirling1: a[i - 1] = 0; e[i - 1] = -shift; break;
      case Preset::lah: a[i - 1] = shift; e[i - 1] = -shift; break;
    }
  }
  return SequencePair(std::move(a), std::move(e));
}

inline SequencePair preset(std::string_view name, std::size_t n) { return preset(parse_preset(name), n); }

/// Eulerian triangle: A(0,0) = 1 and A(m,k) = (m-k) A(m-1,k-1) + (k+1) A(m-1,k),
/// zero outside 0 <= k < m for m >= 1.
inline TriMatrix eulerian_matrix(std::size_t n) {
  TriMatrix mat(n);
  mat.at(0, 0) = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 0; k < m; ++k) {
      Rational value = Rational(k + 1) * mat(m - 1, k);
      if (k > 0) value += Rational(m - k) * mat(m - 1, k - 1);
      mat.at(m, k) = std::move(value);
    }
  }
  return mat;
}

}  // namespace gstirling
