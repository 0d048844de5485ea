#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "gstirling/chordal.hpp"
#include "gstirling/genstirling.hpp"
#include "oracles.hpp"

namespace gstirling {
namespace {

Graph make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle4() { return make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }
Graph path3() { return make_graph(3, {{1, 2}, {2, 3}}); }

TEST(Graph, Basics) {
  Graph g = path3();
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(1, 3));
  EXPECT_EQ(g.edge_count(), 2u);
  g.add_edge(1, 2);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_THROW(g.add_edge(2, 2), PreconditionError);
  EXPECT_THROW(g.add_edge(0, 1), PreconditionError);
  EXPECT_THROW(g.set_order({1, 1, 2}), PreconditionError);
  g.set_order({2, 1, 3});
  EXPECT_TRUE(g.adjacent_in_order(1, 3));
}

TEST(VerifyPeo, EmptyGraph) {
  const PeoReport r = verify_peo(Graph(4));
  EXPECT_TRUE(r.is_peo);
  EXPECT_EQ(r.e_sequence, (std::vector<long>{0, 0, 0, 0}));
}

TEST(VerifyPeo, FourCycleNeverPeo) {
  Graph g = cycle4();
  std::vector<std::size_t> order{1, 2, 3, 4};
  int orders = 0;
  do {
    g.set_order(order);
    const PeoReport r = verify_peo(g);
    EXPECT_FALSE(r.is_peo);
    ASSERT_TRUE(r.failure);
    EXPECT_FALSE(g.adjacent(r.failure->pair.first, r.failure->pair.second));
    ++orders;
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(orders, 24);
}

TEST(VerifyPeo, FailureReportsSmallestPosition) {
  Graph g = cycle4();
  const PeoReport r = verify_peo(g);
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(r.failure->position, 4u);
  EXPECT_EQ(r.failure->pair, (std::pair<std::size_t, std::size_t>{1, 3}));
  EXPECT_EQ(r.e_sequence, (std::vector<long>{0, 1, 1, 2}));
}

TEST(VerifyPeo, Triangle) {
  const PeoReport r = verify_peo(complete(3));
  EXPECT_TRUE(r.is_peo);
  EXPECT_EQ(r.e_sequence, (std::vector<long>{0, 1, 2}));
}

TEST(FindPeo, Examples) {
  const Graph tree = make_graph(5, {{3, 1}, {3, 5}, {5, 2}, {2, 4}});
  const auto order = find_peo(tree);
  ASSERT_TRUE(order);
  Graph reordered = tree;
  reordered.set_order(*order);
  EXPECT_TRUE(verify_peo(reordered).is_peo);
  EXPECT_FALSE(find_peo(cycle4()));
  EXPECT_EQ(find_peo(Graph(1)), (std::vector<std::size_t>{1}));
}

TEST(FindPeo, ChordalGraphsUnderRelabelling) {
  oracle::Rng rng(41);
  for (const auto& e : oracle::all_integer_rgs(6)) {
    const Graph g = graph_from_rgs(e);
    std::vector<std::size_t> perm(6);
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    rng.shuffle(perm);
    Graph relabelled(6);
    for (std::size_t u = 1; u <= 6; ++u)
      for (std::size_t v = u + 1; v <= 6; ++v)
        if (g.adjacent(u, v)) relabelled.add_edge(perm[u - 1], perm[v - 1]);
    const auto order = find_peo(relabelled);
    ASSERT_TRUE(order);
    relabelled.set_order(*order);
    ASSERT_TRUE(rgs_check_integer(verify_peo(relabelled).e_sequence));
  }
}

TEST(GraphStirling, EmptyGraphGivesSecondKind) {
  const TriMatrix s = graph_stirling_matrix(Graph(6));
  EXPECT_EQ(s, stirling_recurrence(preset("stirling2", 6)));
  for (std::size_t m = 0; m <= 6; ++m) {
    const auto counts = oracle::set_partition_counts(m);
    for (std::size_t k = 0; k <= m; ++k) EXPECT_EQ(s(m, k), Rational(counts[k]));
  }
}

TEST(GraphStirling, CompleteGraphGivesIdentity) {
  EXPECT_EQ(graph_stirling_matrix(complete(5)), TriMatrix::identity(5));
}

TEST(GraphStirling, PathOfThree) {
  EXPECT_EQ(graph_stirling_matrix(path3())(3, 2), Rational(1));
  EXPECT_EQ(graph_stirling_bruteforce(path3(), 3, 2), 1u);
  EXPECT_EQ(oracle::independent_partition_counts(path3(), 3)[2], 1u);
}

TEST(GraphStirling, RejectsNonPeo) { EXPECT_THROW(graph_stirling_matrix(cycle4()), PreconditionError); }

TEST(GraphStirlingBruteforce, Examples) {
  const Graph g = make_graph(5, {{1, 4}, {2, 3}, {3, 5}});
  for (std::size_t m = 0; m <= 5; ++m) {
    EXPECT_EQ(graph_stirling_bruteforce(g, m, m), 1u);
    if (m >= 4) {
      EXPECT_EQ(graph_stirling_bruteforce(g, m, 1), 0u);
    }
    EXPECT_EQ(graph_stirling_bruteforce_row(g, m), oracle::independent_partition_counts(g, m));
  }
  EXPECT_EQ(graph_stirling_bruteforce(Graph(3), 3, 2), 3u);
  EXPECT_THROW(graph_stirling_bruteforce(Graph(13), 2, 1), ResourceError);
}

TEST(GraphStirling, MatchesBruteForceOnRgsGraphs) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& e : oracle::all_integer_rgs(n)) {
      const Graph g = graph_from_rgs(e);
      const TriMatrix s = graph_stirling_matrix(g);
      for (std::size_t m = 0; m <= n; ++m) {
        const auto counts = oracle::independent_partition_counts(g, m);
        for (std::size_t k = 0; k <= m; ++k) ASSERT_EQ(s(m, k), Rational(counts[k]));
      }
    }
  }
}

TEST(Chromatic, Examples) {
  const auto e2 = chromatic_report(Graph(2), 3);
  EXPECT_EQ(e2.colorings, 9u);
  EXPECT_TRUE(e2.agrees);
  const auto k3 = chromatic_report(complete(3), 3);
  EXPECT_EQ(k3.colorings, 6u);
  EXPECT_TRUE(k3.agrees);
  const auto p3 = chromatic_report(path3(), 2);
  EXPECT_EQ(p3.colorings, 2u);
  ASSERT_TRUE(p3.peo_product);
  EXPECT_EQ(*p3.peo_product, 2);
  EXPECT_TRUE(p3.agrees);
}

TEST(Chromatic, NonChordalStillMatchesExpansion) {
  const auto c4 = chromatic_report(cycle4(), 3);
  EXPECT_EQ(c4.colorings, 18u);
  EXPECT_FALSE(c4.peo_product);
  EXPECT_TRUE(c4.agrees);
  EXPECT_THROW(chromatic_report(Graph(11), 2), ResourceError);
  EXPECT_THROW(chromatic_report(Graph(2), 7), ResourceError);
  EXPECT_THROW(chromatic_report(Graph(2), 0), PreconditionError);
}

TEST(GraphFromRgs, Examples) {
  EXPECT_EQ(graph_from_rgs({0, 0, 0}).edge_count(), 0u);
  EXPECT_EQ(graph_from_rgs({0, 1, 2}).edge_count(), 3u);
  EXPECT_EQ(verify_peo(graph_from_rgs({0, 1, 1, 2})).e_sequence, (std::vector<long>{0, 1, 1, 2}));
  EXPECT_THROW(graph_from_rgs({0, 2}), PreconditionError);
}

TEST(GraphFromRgs, RoundTripExhaustive) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& e : oracle::all_integer_rgs(n)) {
      const PeoReport r = verify_peo(graph_from_rgs(e));
      ASSERT_TRUE(r.is_peo);
      ASSERT_EQ(r.e_sequence, e);
    }
  }
}

TEST(SignedInverse, Examples) {
  const auto empty = signed_inverse_check(Graph(4));
  EXPECT_TRUE(empty.passed());
  // Signed first-kind numbers vanish in column 0 below the corner.
  EXPECT_EQ(empty.zero_entries.size(), 4u);
  const auto k4 = signed_inverse_check(complete(4));
  EXPECT_TRUE(k4.passed());
  EXPECT_EQ(k4.zero_entries.size(), 10u);
}

TEST(SignedInverse, SubsetSumTermsAreNonNegative) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& e : oracle::all_integer_rgs(n)) {
      const Graph g = graph_from_rgs(e);
      const SequencePair sp = graph_sequence_pair(e);
      const TriMatrix inv = unit_lower_inverse(graph_stirling_matrix(g));
      for (std::size_t m = 0; m <= n; ++m) {
        std::vector<Rational> sums(m + 1);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
          Rational product = 1;
          std::size_t i = 0;
          for (std::size_t s = 1; s <= m; ++s) {
            if (!(mask >> (s - 1) & 1)) continue;
            ++i;
            const Rational factor = sp.a(s) - sp.e(s - i + 1);
            ASSERT_GE(factor.sign(), 0);
            product *= factor;
          }
          sums[i] += product;
        }
        for (std::size_t k = 0; k <= m; ++k) {
          const Rational signed_entry = (m - k) % 2 == 0 ? inv(m, k) : -inv(m, k);
          ASSERT_EQ(signed_entry, sums[m - k]);
        }
      }
    }
  }
}

TEST(SignedInverse, SampledRgsGraphs) {
  oracle::Rng rng(42);
  const auto corpus = oracle::all_integer_rgs(6);
  for (int trial = 0; trial < 25; ++trial) {
    const auto report = signed_inverse_check(graph_from_rgs(rng.pick(corpus)), {std::nullopt, 2});
    ASSERT_TRUE(report.passed());
  }
}

}  // namespace
}  // namespace gstirling
