#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gstirling/errors.hpp"
#include "gstirling/genstirling.hpp"
#include "gstirling/rational.hpp"
#include "gstirling/sequence.hpp"
#include "gstirling/tnn.hpp"
#include "gstirling/tri_matrix.hpp"

namespace gstirling {

/// Simple undirected graph on vertices 1..n with a vertex order v_1..v_n.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : n_(n), adj_(n * n, false), order_(n) {
    std::iota(order_.begin(), order_.end(), std::size_t{1});
  }

  std::size_t size() const noexcept { return n_; }

  /// Adds edge {u,v}; repeated edges are ignored.
  void add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    adj_[(u - 1) * n_ + (v - 1)] = true;
    adj_[(v - 1) * n_ + (u - 1)] = true;
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[(u - 1) * n_ + (v - 1)];
  }

  std::size_t edge_count() const {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), true)) / 2;
  }

  /// order()[i] is the label of v_{i+1}.
  const std::vector<std::size_t>& order() const noexcept { return order_; }

  void set_order(std::vector<std::size_t> order) {
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i + 1) throw PreconditionError("vertex order is not a permutation of 1..n");
    }
    if (sorted.size() != n_) throw PreconditionError("vertex order has the wrong length");
    order_ = std::move(order);
  }

  /// Adjacency of the i-th and j-th vertices in the order (1-based positions).
  bool adjacent_in_order(std::size_t i, std::size_t j) const { return adjacent(order_[i - 1], order_[j - 1]); }

 private:
  void check_vertex(std::size_t v) const {
    if (v < 1 || v > n_) throw PreconditionError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }

  std::size_t n_;
  std::vector<bool> adj_;
  std::vector<std::size_t> order_;
};

struct PeoFailure {
  std::size_t position;                       ///< m such that v_m's earlier neighbours are not a clique
  std::pair<std::size_t, std::size_t> pair;  ///< two non-adjacent earlier neighbours (vertex labels)
};

struct PeoReport {
  bool is_peo = true;
  /// e_m = number of neighbours of v_m among v_1..v_{m-1}.
  std::vector<long> e_sequence;
  std::optional<PeoFailure> failure;
};

/// Checks that every vertex's earlier neighbours form a clique.
inline PeoReport verify_peo(const Graph& g) {
  PeoReport report;
  const std::size_t n = g.size();
  report.e_sequence.resize(n);
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::size_t> earlier;
    for (std::size_t i = 1; i < m; ++i) {
      if (g.adjacent_in_order(i, m)) earlier.push_back(i);
    }
    report.e_sequence[m - 1] = static_cast<long>(earlier.size());
    if (report.failure) continue;
    for (std::size_t x = 0; x < earlier.size() && !report.failure; ++x) {
      for (std::size_t y = x + 1; y < earlier.size(); ++y) {
        if (!g.adjacent_in_order(earlier[x], earlier[y])) {
          report.is_peo = false;
          report.failure = PeoFailure{m, {g.order()[earlier[x] - 1], g.order()[earlier[y] - 1]}};
          break;
        }
      }
    }
  }
  return report;
}

/// Maximum cardinality search (ties to the smallest label), verified.
/// Returns the visiting order when it is a perfect elimination order.
inline std::optional<std::vector<std::size_t>> find_peo(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> weight(n + 1, 0), order;
  std::vector<bool> numbered(n + 1, false);
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = 0;
    for (std::size_t v = 1; v <= n; ++v) {
      if (!numbered[v] && (pick == 0 || weight[v] > weight[pick])) pick = v;
    }
    numbered[pick] = true;
    order.push_back(pick);
    for (std::size_t v = 1; v <= n; ++v) {
      if (!numbered[v] && g.adjacent(pick, v)) ++weight[v];
    }
  }
  Graph reordered = g;
  reordered.set_order(order);
  if (!verify_peo(reordered).is_peo) return std::nullopt;
  return order;
}

/// a = (0, 1, .., n-1) paired with the PEO's earlier-neighbour counts.
inline SequencePair graph_sequence_pair(const std::vector<long>& e_sequence) {
  std::vector<Rational> a, e;
  for (std::size_t i = 0; i < e_sequence.size(); ++i) {
    a.emplace_back(i);
    e.emplace_back(e_sequence[i]);
  }
  return SequencePair(std::move(a), std::move(e));
}

/// S_G: entry (m,k) counts partitions of G_m = G[v_1..v_m] into k
/// non-empty independent sets.
inline TriMatrix graph_stirling_matrix(const Graph& g) {
  const PeoReport peo = verify_peo(g);
  if (!peo.is_peo) {
    throw PreconditionError("graph_stirling_matrix requires a perfect elimination order (fails at v_" +
                            std::to_string(peo.failure->position) + ")");
  }
  return stirling_recurrence(graph_sequence_pair(peo.e_sequence));
}

inline constexpr std::size_t kMaxBruteForceVertices = 12;

/// Counts of partitions of G_m into k independent blocks, k = 0..m, by
/// direct enumeration of block assignments.
inline std::vector<std::uint64_t> graph_stirling_bruteforce_row(const Graph& g, std::size_t m) {
  if (m > g.size()) throw PreconditionError("prefix longer than the graph");
  if (g.size() > kMaxBruteForceVertices) {
    throw ResourceError("independent-partition enumeration is capped at " + std::to_string(kMaxBruteForceVertices) + " vertices");
  }
  std::vector<std::uint64_t> counts(m + 1, 0);
  std::vector<std::size_t> block(m, 0);
  std::size_t blocks = 0;
  // Vertex i joins an existing block with no neighbour in it, or opens a new one.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      ++counts[blocks];
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      bool independent = true;
      for (std::size_t j = 0; j < i && independent; ++j) {
        if (block[j] == b && g.adjacent_in_order(j + 1, i + 1)) independent = false;
      }
      if (!independent) continue;
      block[i] = b;
      const bool opened = b == blocks;
      if (opened) ++blocks;
      self(self, i + 1);
      if (opened) --blocks;
    }
  };
  rec(rec, 0);
  return counts;
}

inline std::uint64_t graph_stirling_bruteforce(const Graph& g, std::size_t m, std::size_t k) {
  const auto row = graph_stirling_bruteforce_row(g, m);
  return k <= m ? row[k] : 0;
}

inline constexpr std::size_t kMaxColoringVertices = 10;
inline constexpr std::size_t kMaxPalette = 6;

struct ChromaticReport {
  std::uint64_t colorings = 0;            ///< proper colourings, counted directly
  mpz_class falling_factorial_sum;        ///< sum_k {G brace k} x(x-1)..(x-k+1)
  std::optional<mpz_class> peo_product;   ///< prod (x - e_i), when the order is a PEO
  bool agrees = false;
};

/// Proper colourings of G with `palette` colours, compared against the
/// independent-partition expansion and, for a PEO, the product formula.
inline ChromaticReport chromatic_report(const Graph& g, std::size_t palette) {
  const std::size_t n = g.size();
  if (n > kMaxColoringVertices || palette > kMaxPalette) {
    throw ResourceError("colouring enumeration is capped at " + std::to_string(kMaxColoringVertices) +
                        " vertices and " + std::to_string(kMaxPalette) + " colours");
  }
  if (palette == 0) throw PreconditionError("palette size must be positive");

  ChromaticReport report;
  std::vector<std::size_t> colour(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ++report.colorings;
      return;
    }
    for (std::size_t c = 0; c < palette; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = !(colour[j] == c && g.adjacent_in_order(j + 1, i + 1));
      if (!ok) continue;
      colour[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);

  const auto stirling = graph_stirling_bruteforce_row(g, n);
  mpz_class falling = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    report.falling_factorial_sum += falling * stirling[k];
    falling *= static_cast<long>(palette) - static_cast<long>(k);
  }
  const PeoReport peo = verify_peo(g);
  if (peo.is_peo) {
    mpz_class product = 1;
    for (long e : peo.e_sequence) product *= static_cast<long>(palette) - e;
    report.peo_product = product;
  }
  const mpz_class direct = report.colorings;
  report.agrees = direct == report.falling_factorial_sum && (!report.peo_product || *report.peo_product == direct);
  return report;
}

inline bool chromatic_check(const Graph& g, std::size_t palette) { return chromatic_report(g, palette).agrees; }

/// Builds a chordal graph whose order v_1..v_n is a PEO with earlier-neighbour
/// counts e. Each v_k joins the lexicographically first e_k-clique among
/// v_1..v_{k-1}.
inline Graph graph_from_rgs(const std::vector<long>& e) {
  if (!rgs_check_integer(e)) throw PreconditionError("graph_from_rgs requires a restricted growth sequence");
  const std::size_t n = e.size();
  Graph g(n);
  std::vector<std::size_t> chosen;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t want = static_cast<std::size_t>(e[k - 1]);
    chosen.clear();
    auto search = [&](auto&& self, std::size_t next) -> bool {
      if (chosen.size() == want) return true;
      for (std::size_t v = next; v < k; ++v) {
        if (k - v < want - chosen.size()) break;
        bool clique = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return g.adjacent(u, v); });
        if (!clique) continue;
        chosen.push_back(v);
        if (self(self, v + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (!search(search, 1)) {
      throw InconsistencyError("no " + std::to_string(want) + "-clique available for vertex " + std::to_string(k));
    }
    for (std::size_t u : chosen) g.add_edge(u, k);
  }
  return g;
}

struct SignedInverseReport {
  std::optional<MinorWitness> negative_minor;
  std::optional<SignViolation> sign_violation;
  /// Off-diagonal zeros of s_G, recorded separately from sign violations.
  std::vector<EntryMismatch> zero_entries;
  bool passed() const { return !negative_minor && !sign_violation; }
};

/// Total non-negativity of S_G and the checkerboard sign pattern of s_G.
inline SignedInverseReport signed_inverse_check(const Graph& g, const MinorScanOptions& options = {}) {
  const TriMatrix s = graph_stirling_matrix(g);
  SignedInverseReport report;
  report.negative_minor = scan_minors(s, options).witness;
  report.sign_violation = inverse_sign_pattern(s);
  report.zero_entries = inverse_zero_entries(s);
  return report;
}

}  // namespace gstirling
