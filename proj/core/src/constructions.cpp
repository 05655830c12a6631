// SPDX-License-Identifier: Apache-2.0

#include "tlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "tlab/errors.hpp"

namespace tlab {

std::vector<int> PartitionedGraph::class_of() const {
  std::vector<int> owner(graph.order(), -1);
  for (int c = 0; c < class_count(); ++c) {
    for (int v : classes[c]) {
      if (v < 0 || v >= graph.order())
        throw std::invalid_argument("class member out of range");
      if (owner[v] != -1)
        throw std::invalid_argument("classes are not disjoint");
      owner[v] = c;
    }
  }
  for (int v = 0; v < graph.order(); ++v)
    if (owner[v] == -1)
      throw std::invalid_argument("classes do not cover vertex " +
                                  std::to_string(v));
  return owner;
}

void PartitionedGraph::validate() const { (void)class_of(); }

PartitionedGraph layered_from_digraph(const BitDigraph& d, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (d.order() < 1) throw std::invalid_argument("digraph must be nonempty");
  const int r = d.order();
  PartitionedGraph pg;
  pg.graph = UGraph(r * depth);
  for (int i = 0; i < r; ++i) {
    d.out(i).for_each([&](int j) {
      for (int s = 0; s < depth; ++s)
        for (int u = s + 1; u < depth; ++u)
          pg.graph.add_edge(layered_vertex(i, s, depth),
                            layered_vertex(j, u, depth));
    });
    pg.classes.push_back(VertexSet::range(i * depth, (i + 1) * depth));
  }
  return pg;
}

namespace {

PartitionedGraph bipartite_shell(int k) {
  if (k < 0) throw std::invalid_argument("side size must be >= 0");
  PartitionedGraph pg;
  pg.graph = UGraph(2 * k);
  pg.classes = {VertexSet::range(0, k), VertexSet::range(k, 2 * k)};
  return pg;
}

}  // namespace

PartitionedGraph half_graph(int k) {
  PartitionedGraph pg = bipartite_shell(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) pg.graph.add_edge(a, k + b);
  return pg;
}

PartitionedGraph complete_bipartite(int k) {
  PartitionedGraph pg = bipartite_shell(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) pg.graph.add_edge(a, k + b);
  return pg;
}

PartitionedGraph empty_bipartite(int k) { return bipartite_shell(k); }

UGraph tensor(const UGraph& g, const UGraph& h) {
  const int ng = g.order(), nh = h.order();
  if (static_cast<int64_t>(ng) * nh > UGraph::kMaxOrder)
    throw CapExceeded("tensor product exceeds the vertex limit");
  UGraph out(ng * nh);
  for (int u = 0; u < ng; ++u)
    for (auto [v, w] : h.edges()) out.add_edge(u * nh + v, u * nh + w);
  for (auto [u, w] : g.edges())
    for (int v = 0; v < nh; ++v)
      for (int x = 0; x < nh; ++x) out.add_edge(u * nh + v, w * nh + x);
  return out;
}

ShiftGraph shift_graph(int n, int N, int vertex_cap) {
  if (n < 2 || N < n) throw std::invalid_argument("need N >= n >= 2");
  // C(N, n) with an early exit once it passes the cap.
  int64_t count = 1;
  for (int i = 1; i <= n; ++i) {
    count = count * (N - n + i) / i;
    if (count > vertex_cap)
      throw CapExceeded("shift graph would have more than " +
                        std::to_string(vertex_cap) + " vertices");
  }
  ShiftGraph sg;
  std::map<std::vector<int>, int> index;
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i;
  while (true) {
    index.emplace(cur, static_cast<int>(sg.subsets.size()));
    sg.subsets.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == N - n + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  sg.graph = UGraph(static_cast<int>(sg.subsets.size()));
  for (int p = 0; p < sg.graph.order(); ++p) {
    const auto& s = sg.subsets[p];
    std::vector<int> q(s.begin() + 1, s.end());
    q.push_back(0);
    for (int x = s.back() + 1; x < N; ++x) {
      q.back() = x;
      sg.graph.add_edge(p, index.at(q));
    }
  }
  return sg;
}

DisjointPairEnumerator::DisjointPairEnumerator(int pool, int max_total)
    : pool_(pool), max_total_(std::min(max_total, pool)) {
  if (pool < 0 || max_total < 0)
    throw std::invalid_argument("pool and max_total must be >= 0");
}

bool DisjointPairEnumerator::advance_subset() {
  int i = size_ - 1;
  while (i >= 0 && subset_[i] == pool_ - size_ + i) --i;
  if (i >= 0) {
    ++subset_[i];
    for (int j = i + 1; j < size_; ++j) subset_[j] = subset_[j - 1] + 1;
    return true;
  }
  if (++size_ > max_total_) return false;
  if (size_ > 62) throw CapExceeded("pair enumeration beyond 62 elements");
  subset_.resize(size_);
  for (int j = 0; j < size_; ++j) subset_[j] = j;
  return true;
}

bool DisjointPairEnumerator::next(std::vector<int>& a, std::vector<int>& b) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    split_ = 0;
  } else if (++split_ >= (uint64_t{1} << size_)) {
    split_ = 0;
    if (!advance_subset()) {
      done_ = true;
      return false;
    }
  }
  a.clear();
  b.clear();
  for (int j = 0; j < size_; ++j)
    ((split_ >> j) & 1U ? b : a).push_back(subset_[j]);
  return true;
}

bool has_extension_witness(const UGraph& g, const std::vector<int>& a,
                           const std::vector<int>& b) {
  auto ok = [&](int v) {
    for (int x : a)
      if (x == v || g.adjacent(v, x)) return false;
    for (int y : b)
      if (y == v || !g.adjacent(v, y)) return false;
    return true;
  };
  if (!b.empty()) {
    // Only neighbours of b[0] can dominate b.
    for (int v : g.neighbours(b[0]))
      if (ok(v)) return true;
    return false;
  }
  for (int v = 0; v < g.order(); ++v)
    if (ok(v)) return true;
  return false;
}

namespace {

bool clique_free_on(const UGraph& g, const std::vector<int>& s, int k) {
  if (k <= 0) return false;
  if (static_cast<int>(s.size()) < k) return true;
  return !has_clique(g.induced(VertexSet(s)), k);
}

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>>
find_extension_failure(const UGraph& g, int n, int pool, int cap) {
  DisjointPairEnumerator pairs(pool, cap);
  std::vector<int> a, b;
  while (pairs.next(a, b)) {
    if (!clique_free_on(g, b, n - 1)) continue;
    if (!has_extension_witness(g, a, b)) return std::make_pair(a, b);
  }
  return std::nullopt;
}

HensonResult henson_approx(int n, int rounds, const UGraph& seed,
                           const HensonOptions& opts) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (rounds < 0) throw std::invalid_argument("rounds must be >= 0");
  if (has_clique(seed, n)) throw std::invalid_argument("seed contains K_n");
  HensonResult res;
  res.graph = seed;
  res.pre_sweep_order = seed.order();
  std::mt19937_64 rng(opts.rng_seed);

  for (int round = 0; round < rounds; ++round) {
    const UGraph& g = res.graph;
    const int pre = g.order();
    std::vector<std::pair<std::vector<int>, std::vector<int>>> todo;
    {
      DisjointPairEnumerator pairs(pre, opts.pair_cap);
      std::vector<int> a, b;
      while (pairs.next(a, b))
        if (clique_free_on(g, b, n - 1)) todo.emplace_back(a, b);
    }
    if (opts.rng_seed != 0) {
      // Fisher-Yates with an explicit index draw, so the order does not
      // depend on the standard library's shuffle.
      for (std::size_t i = todo.size(); i > 1; --i) {
        std::size_t j = rng() % i;
        std::swap(todo[i - 1], todo[j]);
      }
    }
    // Vertices added in this sweep are adjacent only to pre-sweep
    // vertices, so their neighbourhoods are final once chosen.
    std::vector<std::vector<int>> fresh;
    for (const auto& [a, b] : todo) {
      if (has_extension_witness(g, a, b)) continue;
      bool reused = false;
      for (const auto& nb : fresh) {
        bool good = std::includes(nb.begin(), nb.end(), b.begin(), b.end());
        for (int x : a)
          if (std::binary_search(nb.begin(), nb.end(), x)) good = false;
        if (good) {
          reused = true;
          break;
        }
      }
      if (reused) continue;
      if (pre + static_cast<int>(fresh.size()) >= opts.vertex_budget)
        throw CapExceeded("henson approximation hit its vertex budget");
      fresh.push_back(b);
    }
    UGraph next(pre + static_cast<int>(fresh.size()));
    for (auto [u, v] : g.edges()) next.add_edge(u, v);
    for (std::size_t i = 0; i < fresh.size(); ++i)
      for (int y : fresh[i]) next.add_edge(pre + static_cast<int>(i), y);
    res.pre_sweep_order = pre;
    res.graph = std::move(next);
  }
  return res;
}

PartitionedGraph partition_extension_witness(const UGraph& g,
                                             const VertexSet& a,
                                             const VertexSet& b, int n,
                                             int pair_budget) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (pair_budget < 0) throw std::invalid_argument("pair budget must be >= 0");
  if (!a.valid_for(g.order()) || !b.valid_for(g.order()) ||
      !a.disjoint_from(b) || a.size() + b.size() != g.order())
    throw std::invalid_argument("a and b must partition the vertices");
  if (has_clique(g, n)) throw std::invalid_argument("graph contains K_n");

  const int base = g.order();
  const int pool = base + pair_budget;
  PartitionedGraph pg;
  pg.graph = UGraph(pool);
  for (auto [u, v] : g.edges()) pg.graph.add_edge(u, v);

  DisjointPairEnumerator pairs(pool, pool);
  std::vector<int> ak, bk;
  int next_free = base;
  for (int k = 0; k < pair_budget && pairs.next(ak, bk); ++k) {
    if (!clique_free_on(pg.graph, bk, n - 1)) continue;
    int w = -1;
    for (int v = next_free; v < pool; ++v) {
      if (pg.graph.degree(v) != 0) continue;
      if (std::binary_search(ak.begin(), ak.end(), v) ||
          std::binary_search(bk.begin(), bk.end(), v))
        continue;
      w = v;
      break;
    }
    if (w < 0) break;
    for (int y : bk) pg.graph.add_edge(w, y);
    // Vertices below next_free have all been used or touched.
    while (next_free < pool && pg.graph.degree(next_free) != 0) ++next_free;
  }

  std::vector<int> v0(a.members());
  for (int v = base; v < pool; ++v) v0.push_back(v);
  pg.classes = {VertexSet(std::move(v0)), b};
  return pg;
}

RadoWitness rado_partition_witness(int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  RadoWitness out;
  out.pg = half_graph(depth);
  UGraph& g = out.pg.graph;
  DisjointPairEnumerator pairs(2 * depth, 2 * depth);
  std::vector<int> a, b;
  // The extra 1 makes hubs strictly increasing and strictly above every
  // index in their pair, so no hub is reused or lands inside a or b.
  int m_prev = 0;
  while (pairs.next(a, b)) {
    int top = 0;
    for (int v : a) top = std::max(top, v % depth);
    for (int v : b) top = std::max(top, v % depth);
    const int m = top + m_prev + 1;
    if (m >= depth) break;
    out.m_values.push_back(m);
    ++out.pairs_processed;
    const int hub = rado_vertex(m, 0, depth);
    for (int v : a)
      if (v != hub) g.add_edge(hub, v);
    m_prev = m;
  }
  return out;
}

}  // namespace tlab
