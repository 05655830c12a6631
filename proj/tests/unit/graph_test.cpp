// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tlab/errors.hpp"
#include "tlab/graph.hpp"

namespace tlab {
namespace {

TEST(VertexSetTest, SortsAndDeduplicates) {
  VertexSet s{5, 1, 3, 1};
  EXPECT_EQ(s.members(), (std::vector<int>{1, 3, 5}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_TRUE(s.valid_for(6));
  EXPECT_FALSE(s.valid_for(5));
  EXPECT_TRUE(s.disjoint_from(VertexSet{0, 2, 4}));
  EXPECT_FALSE(s.disjoint_from(VertexSet{5}));
}

TEST(VertexSetTest, BitsRoundTrip) {
  VertexSet s{0, 7, 64, 65};
  EXPECT_EQ(VertexSet::from_bits(s.to_bits(70)), s);
  EXPECT_EQ(VertexSet::range(2, 5), (VertexSet{2, 3, 4}));
}

TEST(UGraphTest, EdgeBookkeeping) {
  UGraph g(4);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_TRUE(g.add_edge(2, 3));
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_TRUE(g.remove_edge(0, 1));
  EXPECT_FALSE(g.remove_edge(0, 1));
  EXPECT_EQ(g.edge_count(), 1U);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{2, 3}}));
}

TEST(UGraphTest, RejectsLoopsAndRange) {
  UGraph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
  EXPECT_THROW(g.add_edge(-1, 0), std::invalid_argument);
}

TEST(UGraphTest, AddVertexKeepsRowsConsistent) {
  UGraph g = UGraph::path(3);
  int v = g.add_vertex();
  EXPECT_EQ(v, 3);
  g.add_edge(v, 0);
  EXPECT_TRUE(g.row(0).test(3));
  EXPECT_EQ(g.degree(0), 2);
}

TEST(UGraphTest, NamedFamilies) {
  EXPECT_EQ(UGraph::complete(5).edge_count(), 10U);
  EXPECT_EQ(UGraph::cycle(5).edge_count(), 5U);
  EXPECT_EQ(UGraph::path(5).edge_count(), 4U);
  EXPECT_EQ(UGraph::empty(5).edge_count(), 0U);
}

TEST(UGraphTest, InducedSubgraphRelabelsInOrder) {
  UGraph c = UGraph::cycle(5);
  UGraph h = c.induced(VertexSet{0, 1, 2});
  EXPECT_EQ(h.order(), 3);
  EXPECT_TRUE(h.adjacent(0, 1));
  EXPECT_TRUE(h.adjacent(1, 2));
  EXPECT_FALSE(h.adjacent(0, 2));
}

TEST(CliqueTest, CycleAndComplete) {
  EXPECT_TRUE(has_clique(UGraph::cycle(5), 2));
  EXPECT_FALSE(has_clique(UGraph::cycle(5), 3));
  EXPECT_TRUE(has_clique(UGraph::cycle(3), 3));
  auto w = find_clique(UGraph::complete(6), 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(is_clique(UGraph::complete(6), VertexSet(*w)));
}

TEST(IndependenceTest, KnownValues) {
  EXPECT_EQ(independence_number(UGraph::cycle(5)), 2);
  EXPECT_EQ(independence_number(UGraph::cycle(8)), 4);
  EXPECT_EQ(independence_number(UGraph::complete(7)), 1);
  EXPECT_EQ(independence_number(UGraph::empty(9)), 9);
  auto r = max_independent_set(UGraph::path(7));
  EXPECT_EQ(r.size, 4);
  EXPECT_TRUE(is_independent(UGraph::path(7), r.witness));
}

TEST(IndependenceTest, RespectsOrderCap) {
  IndependenceOptions opts;
  opts.max_order = 4;
  EXPECT_THROW(independence_number(UGraph::empty(5), opts), BudgetExceeded);
}

TEST(IndependenceTest, MatchesOracleOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    UGraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) g.add_edge(i, j);
    auto r = max_independent_set(g);
    EXPECT_EQ(r.size, oracle::independence_number(g));
    EXPECT_TRUE(is_independent(g, r.witness));
    EXPECT_EQ(r.witness.size(), r.size);
    EXPECT_EQ(has_clique(g, 4), oracle::clique_number(g) >= 4);
  }
}

TEST(BitDigraphTest, ArcsAndHelpers) {
  BitDigraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  d.add_arc(1, 2);
  EXPECT_EQ(d.arc_count(), 3);
  EXPECT_TRUE(d.adjacent(2).test(1));
  EXPECT_FALSE(d.adjacent(2).test(0));
  d.remove_arc(1, 0);
  EXPECT_FALSE(d.has_arc(1, 0));
  EXPECT_THROW(d.add_arc(2, 2), std::invalid_argument);
  EXPECT_EQ(d.underlying().edge_count(), 2U);
}

TEST(BitDigraphTest, VertexSurgery) {
  BitDigraph d = BitDigraph::directed_cycle(4);
  BitDigraph e = d.with_vertex(Mask128::single(0), Mask128::single(2));
  EXPECT_EQ(e.order(), 5);
  EXPECT_TRUE(e.has_arc(4, 0));
  EXPECT_TRUE(e.has_arc(2, 4));
  EXPECT_EQ(e.without_vertex(4), d);
  std::vector<int> perm{1, 2, 3, 0};
  BitDigraph r = d.relabel(perm);
  EXPECT_TRUE(r.has_arc(1, 2));
  EXPECT_TRUE(r.has_arc(0, 1));
}

TEST(TransitiveTest, TournamentAndCycle) {
  EXPECT_TRUE(has_transitive_set(BitDigraph::transitive_tournament(5), 5));
  EXPECT_FALSE(has_transitive_set(BitDigraph::directed_cycle(3), 3));
  EXPECT_TRUE(has_transitive_set(BitDigraph::directed_cycle(3), 2));
  // A back-arc does not spoil transitivity.
  BitDigraph d = BitDigraph::transitive_tournament(3);
  d.add_arc(2, 0);
  auto t = find_transitive_tuple(d, 3);
  ASSERT_TRUE(t.has_value());
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) EXPECT_TRUE(d.has_arc((*t)[i], (*t)[j]));
}

TEST(TransitiveTest, RestrictedCandidates) {
  BitDigraph d = BitDigraph::transitive_tournament(5);
  EXPECT_FALSE(find_transitive_tuple_in(d, Mask128::first_n(2), 3));
  EXPECT_TRUE(find_transitive_tuple_in(d, Mask128::first_n(3), 3));
  EXPECT_FALSE(find_digraph_independent_in(d, Mask128::first_n(5), 2));
  EXPECT_TRUE(digraph_independent(BitDigraph::empty(4), 4));
}

TEST(TransitiveTest, PredicatesMatchOracleOnAllOrderFour) {
  for (const auto& s : oracle::all_labelled_digraphs(4)) {
    BitDigraph d = s.to_bit();
    for (int k = 1; k <= 4; ++k) {
      ASSERT_EQ(has_transitive_set(d, k), oracle::has_transitive(s, k));
      ASSERT_EQ(digraph_independent(d, k), oracle::has_independent(s, k));
    }
  }
}

}  // namespace
}  // namespace tlab
