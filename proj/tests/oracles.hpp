// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference implementations. Everything here is deliberately
// naive: plain loops over all tuples, subsets or permutations, sharing no
// code with the library searches they check.

#ifndef TLAB_TESTS_ORACLES_HPP_
#define TLAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "tlab/constructions.hpp"
#include "tlab/graph.hpp"

namespace tlab::oracle {

// Arc matrix of a digraph on at most 8 vertices.
struct SmallDigraph {
  int n = 0;
  std::vector<std::vector<bool>> arc;

  explicit SmallDigraph(int order)
      : n(order), arc(order, std::vector<bool>(order, false)) {}

  BitDigraph to_bit() const {
    BitDigraph d(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (arc[i][j]) d.add_arc(i, j);
    return d;
  }
  static SmallDigraph from_bit(const BitDigraph& d) {
    SmallDigraph s(d.order());
    for (int i = 0; i < s.n; ++i)
      for (int j = 0; j < s.n; ++j) s.arc[i][j] = i != j && d.has_arc(i, j);
    return s;
  }
};

// Every labelled loop-free digraph on n vertices: each unordered pair takes
// one of four states. 4^C(n,2) results.
inline std::vector<SmallDigraph> all_labelled_digraphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const uint64_t total = uint64_t{1} << (2 * pairs.size());
  std::vector<SmallDigraph> out;
  out.reserve(total);
  for (uint64_t code = 0; code < total; ++code) {
    SmallDigraph d(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      int s = static_cast<int>((code >> (2 * p)) & 3U);
      d.arc[pairs[p].first][pairs[p].second] = s & 1;
      d.arc[pairs[p].second][pairs[p].first] = s & 2;
    }
    out.push_back(std::move(d));
  }
  return out;
}

// Tries every ordered k-tuple of distinct vertices.
inline bool has_transitive(const SmallDigraph& d, int k) {
  if (k > d.n) return false;
  std::vector<int> perm(d.n);
  std::iota(perm.begin(), perm.end(), 0);
  // All permutations cover all ordered k-prefixes.
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j) ok = d.arc[perm[i]][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool has_independent(const SmallDigraph& d, int k) {
  for (uint32_t mask = 0; mask < (1U << d.n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    bool ok = true;
    for (int i = 0; i < d.n && ok; ++i)
      for (int j = 0; j < d.n && ok; ++j)
        if (i != j && (mask >> i & 1U) && (mask >> j & 1U) && d.arc[i][j])
          ok = false;
    if (ok) return true;
  }
  return false;
}

inline bool is_counterexample(const SmallDigraph& d, int n, int m) {
  return !has_transitive(d, n) && !has_independent(d, m);
}

// Least r <= max_order such that no labelled digraph on r vertices is a
// counterexample; -1 if every order up to max_order has one.
inline int naive_dr(int n, int m, int max_order) {
  for (int r = 0; r <= max_order; ++r) {
    bool any = false;
    for (const auto& d : all_labelled_digraphs(r))
      if (is_counterexample(d, n, m)) {
        any = true;
        break;
      }
    if (!any) return r;
  }
  return -1;
}

// Minimum arc code over all relabellings: a complete isomorphism invariant
// for digraphs on at most 8 vertices.
inline uint64_t min_code(const SmallDigraph& d) {
  std::vector<int> perm(d.n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t{0};
  do {
    uint64_t code = 0;
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j)
        code = (code << 1) | (d.arc[perm[i]][perm[j]] ? 1U : 0U);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const SmallDigraph& a, const SmallDigraph& b) {
  return a.n == b.n && min_code(a) == min_code(b);
}

// ---- undirected ----

inline int independence_number(const UGraph& g) {
  const int n = g.order();
  int best = 0;
  for (uint32_t mask = 0; mask < (1U << n); ++mask) {
    int c = __builtin_popcount(mask);
    if (c <= best) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (mask >> i & 1U)
        for (int j = i + 1; j < n && ok; ++j)
          if ((mask >> j & 1U) && g.adjacent(i, j)) ok = false;
    if (ok) best = c;
  }
  return best;
}

inline int clique_number(const UGraph& g) {
  const int n = g.order();
  int best = 0;
  for (uint32_t mask = 0; mask < (1U << n); ++mask) {
    int c = __builtin_popcount(mask);
    if (c <= best) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (mask >> i & 1U)
        for (int j = i + 1; j < n && ok; ++j)
          if ((mask >> j & 1U) && !g.adjacent(i, j)) ok = false;
    if (ok) best = c;
  }
  return best;
}

// Does some independent set meet >= m classes in >= ell vertices each?
// Walks every independent set of the graph.
inline bool has_transversal(const PartitionedGraph& pg, int m, int ell) {
  const int n = pg.graph.order();
  std::vector<int> cls(n, -1);
  for (int c = 0; c < pg.class_count(); ++c)
    for (int v : pg.classes[c]) cls[v] = c;
  std::vector<int> count(pg.class_count(), 0);
  std::vector<int> chosen;
  bool found = false;
  auto rec = [&](auto& self, int v) -> void {
    if (found) return;
    int hit = 0;
    for (int c : count) hit += c >= ell;
    if (hit >= m) {
      found = true;
      return;
    }
    for (int u = v; u < n && !found; ++u) {
      bool ok = true;
      for (int w : chosen)
        if (pg.graph.adjacent(u, w)) ok = false;
      if (!ok) continue;
      chosen.push_back(u);
      ++count[cls[u]];
      self(self, u + 1);
      --count[cls[u]];
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

// Largest k with distinct a_1..a_k in a, b_1..b_k in b and a_i ~ b_j for
// all i < j, over all ordered sequences.
inline int half_graph_order(const UGraph& g, const std::vector<int>& a,
                            const std::vector<int>& b) {
  const int top = static_cast<int>(std::min(a.size(), b.size()));
  int best = top > 0 ? 1 : 0;
  for (int k = 2; k <= top; ++k) {
    bool found = false;
    // Ordered k-sequences via permutations of index masks.
    std::vector<int> pa(a.size()), pb(b.size());
    std::iota(pa.begin(), pa.end(), 0);
    std::set<std::vector<int>> seen_a;
    do {
      std::vector<int> sa(pa.begin(), pa.begin() + k);
      if (!seen_a.insert(sa).second) continue;
      std::iota(pb.begin(), pb.end(), 0);
      std::set<std::vector<int>> seen_b;
      do {
        std::vector<int> sb(pb.begin(), pb.begin() + k);
        if (!seen_b.insert(sb).second) continue;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
          for (int j = i + 1; j < k && ok; ++j)
            ok = g.adjacent(a[sa[i]], b[sb[j]]);
        if (ok) found = true;
      } while (!found && std::next_permutation(pb.begin(), pb.end()));
    } while (!found && std::next_permutation(pa.begin(), pa.end()));
    if (!found) break;
    best = k;
  }
  return best;
}

// Is there A' in a, B' in b, |A'| = |B'| = k, with no edge between them?
inline bool has_empty_biclique(const UGraph& g, const std::vector<int>& a,
                               const std::vector<int>& b, int k) {
  const int na = static_cast<int>(a.size());
  for (uint32_t mask = 0; mask < (1U << na); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int free = 0;
    for (int y : b) {
      bool ok = true;
      for (int i = 0; i < na && ok; ++i)
        if ((mask >> i & 1U) && g.adjacent(a[i], y)) ok = false;
      free += ok;
    }
    if (free >= k) return true;
  }
  return false;
}

}  // namespace tlab::oracle

#endif  // TLAB_TESTS_ORACLES_HPP_
