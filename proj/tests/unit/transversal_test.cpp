// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tlab/errors.hpp"
#include "tlab/transversal.hpp"

namespace tlab {
namespace {

PartitionedGraph random_instance(std::mt19937& rng, int max_vertices,
                                 int max_classes) {
  const int v = 1 + static_cast<int>(rng() % max_vertices);
  const int r = 1 + static_cast<int>(rng() % std::min(v, max_classes));
  const int density = 2 + static_cast<int>(rng() % 5);
  PartitionedGraph pg;
  pg.graph = UGraph(v);
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (static_cast<int>(rng() % density) == 0) pg.graph.add_edge(i, j);
  std::vector<std::vector<int>> cls(r);
  for (int i = 0; i < v; ++i)
    cls[i < r ? i : static_cast<int>(rng() % r)].push_back(i);
  for (auto& c : cls) pg.classes.emplace_back(std::move(c));
  return pg;
}

TEST(TransversalTest, SimpleFoundAndNone) {
  PartitionedGraph pg = complete_bipartite(3);
  auto r = find_transversal(pg, {2, 1});
  EXPECT_EQ(r.status, TransversalStatus::kNone);
  auto s = find_transversal(pg, {1, 3});
  ASSERT_EQ(s.status, TransversalStatus::kFound);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_TRUE(verify_transversal(pg, {1, 3}, *s.witness));
  EXPECT_EQ(s.profile[0] + s.profile[1], 3);

  PartitionedGraph e = empty_bipartite(3);
  auto t = find_transversal(e, {2, 3});
  ASSERT_EQ(t.status, TransversalStatus::kFound);
  EXPECT_EQ(t.profile, (std::vector<int>{3, 3}));
}

TEST(TransversalTest, VerifyRejectsBadWitnesses) {
  PartitionedGraph pg = half_graph(3);
  EXPECT_FALSE(verify_transversal(pg, {2, 1}, VertexSet{0, 5}));  // edge 0~5
  EXPECT_TRUE(verify_transversal(pg, {2, 1}, VertexSet{0, 3}));
  EXPECT_FALSE(verify_transversal(pg, {2, 2}, VertexSet{0, 3}));
  EXPECT_FALSE(verify_transversal(pg, {1, 1}, VertexSet{9}));
}

TEST(TransversalTest, MatchesOracle) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    PartitionedGraph pg = random_instance(rng, 14, 4);
    TransversalQuery q{1 + static_cast<int>(rng() % pg.class_count()),
                       1 + static_cast<int>(rng() % 3)};
    auto r = find_transversal(pg, q);
    ASSERT_NE(r.status, TransversalStatus::kBudget);
    bool want = oracle::has_transversal(pg, q.m, q.ell);
    ASSERT_EQ(r.status == TransversalStatus::kFound, want) << "trial " << trial;
    if (want) EXPECT_TRUE(verify_transversal(pg, q, *r.witness));
  }
}

TEST(TransversalTest, ThreadsGiveTheSameWitness) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    PartitionedGraph pg = random_instance(rng, 16, 4);
    TransversalQuery q{1 + static_cast<int>(rng() % pg.class_count()), 2};
    TransversalOptions one, many;
    many.threads = 4;
    auto a = find_transversal(pg, q, one);
    auto b = find_transversal(pg, q, many);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(TransversalTest, BudgetStatus) {
  PartitionedGraph pg = empty_bipartite(30);
  TransversalOptions opts;
  opts.limits = SearchLimits::nodes(3);
  auto r = find_transversal(pg, {2, 30}, opts);
  EXPECT_EQ(r.status, TransversalStatus::kBudget);
  EXPECT_STREQ(to_string(r.status), "budget");
}

TEST(TransversalTest, RejectsBadQueries) {
  PartitionedGraph pg = empty_bipartite(2);
  EXPECT_THROW(find_transversal(pg, {0, 1}), std::invalid_argument);
  EXPECT_THROW(find_transversal(pg, {1, 0}), std::invalid_argument);
  pg.classes.pop_back();
  EXPECT_THROW(find_transversal(pg, {1, 1}), std::invalid_argument);
}

TEST(ProfileTest, TensorBlowup) {
  // K_3 (x) E_6 with each fiber split into two classes of three.
  PartitionedGraph pg;
  pg.graph = tensor(UGraph::complete(3), UGraph::empty(6));
  for (int u = 0; u < 3; ++u) {
    pg.classes.push_back(VertexSet::range(u * 6, u * 6 + 3));
    pg.classes.push_back(VertexSet::range(u * 6 + 3, u * 6 + 6));
  }
  for (int ell = 1; ell <= 3; ++ell) {
    ProfileResult p = max_profile(pg, ell);
    EXPECT_TRUE(p.exact);
    EXPECT_EQ(p.lower, 2);
    EXPECT_EQ(p.upper, 2);
  }
  ProfileResult none = max_profile(pg, 4);
  EXPECT_TRUE(none.exact);
  EXPECT_EQ(none.lower, 0);
  EXPECT_EQ(none.upper, 0);
}

TEST(EqualClassesTest, Layout) {
  auto c = equal_classes(3, 2);
  ASSERT_EQ(c.size(), 3U);
  EXPECT_EQ(c[1], (VertexSet{2, 3}));
}

// Exists a K_n-free graph on r classes of the given size with no (m, ell)
// transversal? Tries every graph on at most 6 vertices.
bool brute_counterexample(int n, int m, int ell, int r, int size) {
  const int v = r * size;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) pairs.emplace_back(i, j);
  PartitionedGraph pg;
  pg.classes = equal_classes(r, size);
  for (uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    pg.graph = UGraph(v);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (mask >> p & 1U) pg.graph.add_edge(pairs[p].first, pairs[p].second);
    if (oracle::clique_number(pg.graph) >= n) continue;
    if (!oracle::has_transversal(pg, m, ell)) return true;
  }
  return false;
}

TEST(EstimateTest, ExhaustiveMatchesBruteForce) {
  struct Case {
    int n, m, ell, r, size;
  };
  for (Case c : {Case{3, 2, 1, 2, 3}, Case{3, 2, 1, 3, 2}, Case{3, 2, 2, 3, 2},
                 Case{3, 3, 1, 3, 2}, Case{2, 2, 2, 2, 2}, Case{3, 2, 2, 2, 3},
                 Case{4, 2, 1, 3, 2}}) {
    EstimateOptions opts;
    opts.strategy = EstimateStrategy::kExhaustive;
    opts.r = c.r;
    NEstimate e = estimate_N(c.n, c.m, c.ell, c.size, opts);
    bool want = brute_counterexample(c.n, c.m, c.ell, c.r, c.size);
    EXPECT_EQ(e.implied_greater, want)
        << c.n << c.m << c.ell << " r=" << c.r << " size=" << c.size;
    if (!want) EXPECT_TRUE(e.exhausted);
    if (e.best_counterexample) {
      EXPECT_LT(oracle::clique_number(e.best_counterexample->graph), c.n);
      EXPECT_FALSE(oracle::has_transversal(*e.best_counterexample, c.m, c.ell));
    }
  }
}

TEST(EstimateTest, HeuristicsOnlyReportVerifiedCounterexamples) {
  for (auto strategy : {EstimateStrategy::kRandom, EstimateStrategy::kLocalSearch}) {
    EstimateOptions opts;
    opts.strategy = strategy;
    opts.samples = 30;
    NEstimate e = estimate_N(3, 2, 2, 2, opts);  // r = dr(3,2) = 4
    EXPECT_EQ(e.r, 4);
    EXPECT_FALSE(e.exhausted);
    if (e.best_counterexample) {
      EXPECT_LT(oracle::clique_number(e.best_counterexample->graph), 3);
      EXPECT_FALSE(oracle::has_transversal(*e.best_counterexample, 2, 2));
    }
  }
  // Classes smaller than ell admit no transversal at all.
  EstimateOptions opts;
  opts.r = 2;
  NEstimate small = estimate_N(3, 1, 3, 2, opts);
  EXPECT_TRUE(small.implied_greater);
}

TEST(EstimateTest, DeterministicForFixedSeed) {
  EstimateOptions opts;
  opts.strategy = EstimateStrategy::kLocalSearch;
  opts.samples = 5;
  opts.r = 3;
  NEstimate a = estimate_N(3, 2, 1, 3, opts);
  NEstimate b = estimate_N(3, 2, 1, 3, opts);
  EXPECT_EQ(a.implied_greater, b.implied_greater);
  EXPECT_EQ(a.candidates_examined, b.candidates_examined);
  if (a.best_counterexample)
    EXPECT_EQ(a.best_counterexample->graph, b.best_counterexample->graph);
}

}  // namespace
}  // namespace tlab
