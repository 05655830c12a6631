// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tlab/constructions.hpp"
#include "tlab/errors.hpp"

namespace tlab {
namespace {

bool naive_has_triangle(const UGraph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.adjacent(a, b))
        for (int c = b + 1; c < n; ++c)
          if (g.adjacent(a, c) && g.adjacent(b, c)) return true;
  return false;
}

TEST(PartitionedGraphTest, ClassOfValidates) {
  PartitionedGraph pg;
  pg.graph = UGraph(3);
  pg.classes = {VertexSet{0, 1}, VertexSet{2}};
  EXPECT_EQ(pg.class_of(), (std::vector<int>{0, 0, 1}));
  pg.classes = {VertexSet{0, 1}, VertexSet{1, 2}};
  EXPECT_THROW(pg.validate(), std::invalid_argument);
  pg.classes = {VertexSet{0, 1}};
  EXPECT_THROW(pg.validate(), std::invalid_argument);
  pg.classes = {VertexSet{0, 1, 2, 3}};
  EXPECT_THROW(pg.validate(), std::invalid_argument);
}

TEST(LayeredTest, CycleExample) {
  PartitionedGraph pg = layered_from_digraph(BitDigraph::directed_cycle(3), 5);
  EXPECT_EQ(pg.graph.order(), 15);
  EXPECT_EQ(pg.class_count(), 3);
  pg.validate();
  EXPECT_FALSE(has_clique(pg.graph, 3));
  for (const auto& c : pg.classes) EXPECT_TRUE(is_independent(pg.graph, c));
  // Arc 0->1 joins (0,s) to (1,u) exactly when s < u.
  EXPECT_TRUE(pg.graph.adjacent(layered_vertex(0, 1, 5), layered_vertex(1, 2, 5)));
  EXPECT_FALSE(pg.graph.adjacent(layered_vertex(0, 2, 5), layered_vertex(1, 2, 5)));
  EXPECT_FALSE(pg.graph.adjacent(layered_vertex(0, 3, 5), layered_vertex(1, 2, 5)));
}

TEST(LayeredTest, CliqueIffTransitiveOnAllOrderFour) {
  // With depth >= n, K_n appears exactly when a transitive n-set does.
  for (const auto& s : oracle::all_labelled_digraphs(4)) {
    BitDigraph d = s.to_bit();
    PartitionedGraph pg = layered_from_digraph(d, 3);
    ASSERT_EQ(naive_has_triangle(pg.graph), oracle::has_transitive(s, 3));
  }
}

TEST(LayeredTest, RejectsBadArguments) {
  EXPECT_THROW(layered_from_digraph(BitDigraph(0), 3), std::invalid_argument);
  EXPECT_THROW(layered_from_digraph(BitDigraph(2), 0), std::invalid_argument);
}

TEST(BipartiteTest, HalfCompleteEmpty) {
  PartitionedGraph h = half_graph(4);
  EXPECT_EQ(h.graph.order(), 8);
  EXPECT_EQ(h.graph.edge_count(), 6U);
  EXPECT_TRUE(h.graph.adjacent(0, 4 + 1));
  EXPECT_FALSE(h.graph.adjacent(1, 4 + 1));
  EXPECT_EQ(oracle::half_graph_order(h.graph, h.classes[0].members(),
                                     h.classes[1].members()),
            4);
  EXPECT_EQ(complete_bipartite(3).graph.edge_count(), 9U);
  EXPECT_EQ(empty_bipartite(3).graph.edge_count(), 0U);
  EXPECT_EQ(half_graph(0).graph.order(), 0);
}

TEST(TensorTest, MatchesDefinition) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    UGraph g(1 + rng() % 5), h(1 + rng() % 5);
    for (int i = 0; i < g.order(); ++i)
      for (int j = i + 1; j < g.order(); ++j)
        if (rng() % 2) g.add_edge(i, j);
    for (int i = 0; i < h.order(); ++i)
      for (int j = i + 1; j < h.order(); ++j)
        if (rng() % 2) h.add_edge(i, j);
    UGraph t = tensor(g, h);
    const int nh = h.order();
    for (int p = 0; p < t.order(); ++p)
      for (int q = p + 1; q < t.order(); ++q) {
        int u = p / nh, v = p % nh, u2 = q / nh, v2 = q % nh;
        bool want = (u == u2 && h.adjacent(v, v2)) ||
                    (u != u2 && g.adjacent(u, u2));
        ASSERT_EQ(t.adjacent(p, q), want);
      }
  }
}

TEST(TensorTest, NamedCases) {
  UGraph kt = tensor(UGraph::complete(2), UGraph::empty(4));
  EXPECT_EQ(kt.edge_count(), 16U);
  EXPECT_EQ(independence_number(kt), 4);
  EXPECT_EQ(independence_number(tensor(UGraph::complete(4), UGraph::empty(5))), 5);
  UGraph c5 = UGraph::cycle(5);
  EXPECT_EQ(tensor(UGraph::empty(1), c5), c5);
  EXPECT_THROW(tensor(UGraph::empty(300), UGraph::empty(300)), CapExceeded);
}

TEST(ShiftGraphTest, SmallCases) {
  ShiftGraph s = shift_graph(2, 3);
  EXPECT_EQ(s.graph.order(), 3);
  EXPECT_EQ(s.graph.edge_count(), 1U);
  ShiftGraph t = shift_graph(2, 4);
  auto idx = [&](std::vector<int> v) {
    for (int i = 0; i < t.graph.order(); ++i)
      if (t.subsets[i] == v) return i;
    return -1;
  };
  EXPECT_TRUE(t.graph.adjacent(idx({0, 1}), idx({1, 2})));
  EXPECT_FALSE(t.graph.adjacent(idx({0, 1}), idx({2, 3})));
  for (int n = 3; n <= 8; ++n)
    EXPECT_FALSE(naive_has_triangle(shift_graph(2, n).graph));
  EXPECT_THROW(shift_graph(3, 40, 1000), CapExceeded);
  EXPECT_THROW(shift_graph(1, 4), std::invalid_argument);
}

TEST(ShiftGraphTest, EdgesMatchDefinition) {
  for (int n = 2; n <= 3; ++n) {
    ShiftGraph s = shift_graph(n, 7);
    for (int p = 0; p < s.graph.order(); ++p)
      for (int q = 0; q < s.graph.order(); ++q) {
        if (p == q) continue;
        const auto& a = s.subsets[p];
        const auto& b = s.subsets[q];
        bool shifted = true;
        for (int i = 0; i + 1 < n; ++i) shifted = shifted && a[i + 1] == b[i];
        shifted = shifted && a[n - 1] < b[n - 1];
        if (shifted) EXPECT_TRUE(s.graph.adjacent(p, q));
        bool either = shifted;
        bool back = true;
        for (int i = 0; i + 1 < n; ++i) back = back && b[i + 1] == a[i];
        either = either || (back && b[n - 1] < a[n - 1]);
        EXPECT_EQ(s.graph.adjacent(p, q), either);
      }
  }
}

TEST(DisjointPairTest, CountsAndOrder) {
  // Pairs with |A u B| <= t over a pool of p: sum_s C(p,s) 2^s.
  DisjointPairEnumerator e(5, 3);
  std::vector<int> a, b;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  int last_total = 0;
  while (e.next(a, b)) {
    std::vector<int> both = a;
    both.insert(both.end(), b.begin(), b.end());
    std::set<int> u(both.begin(), both.end());
    EXPECT_EQ(u.size(), both.size());
    EXPECT_GE(static_cast<int>(both.size()), last_total);
    last_total = static_cast<int>(both.size());
    EXPECT_TRUE(seen.insert({a, b}).second);
  }
  EXPECT_EQ(seen.size(), 1U + 5 * 2 + 10 * 4 + 10 * 8);
}

bool naive_extension(const UGraph& g, const std::vector<int>& a,
                     const std::vector<int>& b) {
  for (int z = 0; z < g.order(); ++z) {
    bool ok = true;
    for (int x : a) ok = ok && x != z && !g.adjacent(x, z);
    for (int y : b) ok = ok && y != z && g.adjacent(y, z);
    if (ok) return true;
  }
  return false;
}

TEST(HensonTest, ZeroRoundsIsIdentity) {
  UGraph c5 = UGraph::cycle(5);
  EXPECT_EQ(henson_approx(3, 0, c5).graph, c5);
}

TEST(HensonTest, ExtensionOverSeed) {
  HensonResult r = henson_approx(3, 1, UGraph::empty(2));
  EXPECT_EQ(r.pre_sweep_order, 2);
  EXPECT_FALSE(naive_has_triangle(r.graph));
  // Every disjoint (A, B) over {0, 1} with B edge-free.
  for (int code = 0; code < 9; ++code) {
    std::vector<int> a, b;
    for (int v = 0, c = code; v < 2; ++v, c /= 3) {
      if (c % 3 == 1) a.push_back(v);
      if (c % 3 == 2) b.push_back(v);
    }
    EXPECT_TRUE(naive_extension(r.graph, a, b));
    EXPECT_EQ(has_extension_witness(r.graph, a, b), naive_extension(r.graph, a, b));
  }
  EXPECT_FALSE(find_extension_failure(r.graph, 3, 2, 3).has_value());
}

TEST(HensonTest, DeterministicAndSeeded) {
  HensonOptions opts;
  EXPECT_EQ(henson_approx(3, 2, UGraph::path(3), opts).graph,
            henson_approx(3, 2, UGraph::path(3), opts).graph);
  opts.rng_seed = 99;
  HensonResult a = henson_approx(3, 2, UGraph::path(3), opts);
  EXPECT_EQ(a.graph, henson_approx(3, 2, UGraph::path(3), opts).graph);
  EXPECT_FALSE(naive_has_triangle(a.graph));
  EXPECT_FALSE(find_extension_failure(a.graph, 3, a.pre_sweep_order, 3));
}

TEST(HensonTest, RejectsCliqueSeedAndCaps) {
  EXPECT_THROW(henson_approx(3, 1, UGraph::complete(3)), std::invalid_argument);
  HensonOptions opts;
  opts.vertex_budget = 10;
  EXPECT_THROW(henson_approx(3, 3, UGraph::empty(3), opts), CapExceeded);
}

TEST(PartitionExtensionTest, PreservesInducedCopy) {
  UGraph g = UGraph::empty(2);
  PartitionedGraph pg =
      partition_extension_witness(g, VertexSet{0}, VertexSet{1}, 3, 10);
  pg.validate();
  EXPECT_TRUE(pg.classes[0].contains(0));
  EXPECT_TRUE(pg.classes[1].contains(1));
  EXPECT_FALSE(pg.graph.adjacent(0, 1));
}

TEST(PartitionExtensionTest, TriangleFreeOnRandomSeeds) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    UGraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2 && !g.adjacent(i, j)) {
          g.add_edge(i, j);
          if (naive_has_triangle(g)) g.remove_edge(i, j);
        }
    std::vector<int> a, b;
    for (int v = 0; v < n; ++v) (rng() % 2 ? a : b).push_back(v);
    PartitionedGraph pg = partition_extension_witness(
        g, VertexSet(a), VertexSet(b), 3, 30);
    pg.validate();
    EXPECT_FALSE(naive_has_triangle(pg.graph));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        ASSERT_EQ(pg.graph.adjacent(u, v), g.adjacent(u, v));
    for (int v : a) EXPECT_TRUE(pg.classes[0].contains(v));
    for (int v : b) EXPECT_TRUE(pg.classes[1].contains(v));
  }
}

TEST(RadoTest, DepthOneAndCliqueProperty) {
  RadoWitness one = rado_partition_witness(1);
  EXPECT_EQ(one.pg.graph.order(), 2);
  EXPECT_EQ(one.pg.graph.edge_count(), 0U);
  RadoWitness w = rado_partition_witness(12);
  w.pg.validate();
  EXPECT_TRUE(is_independent(w.pg.graph, w.pg.classes[1]));
  for (std::size_t i = 1; i < w.m_values.size(); ++i)
    EXPECT_GT(w.m_values[i], w.m_values[i - 1]);
  EXPECT_EQ(static_cast<int>(w.m_values.size()), w.pairs_processed);
}

}  // namespace
}  // namespace tlab
