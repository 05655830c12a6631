// SPDX-License-Identifier: Apache-2.0

#include "tlab/embed.hpp"

#include <algorithm>
#include <stdexcept>

#include "tlab/errors.hpp"

namespace tlab {

namespace {

// Ordered search for half graphs of a fixed length.
class HalfSearch {
 public:
  HalfSearch(const UGraph& g, const VertexSet& a, const VertexSet& b,
             Budget& budget)
      : g_(g), a_(a.members()), b_(b.members()), budget_(budget) {}

  // True if a half graph of length k exists; fills left/right.
  bool find(int k, std::vector<int>& left, std::vector<int>& right) {
    left.clear();
    right.clear();
    std::vector<char> used_a(a_.size(), 0), used_b(b_.size(), 0);
    std::vector<int> common(b_.size());
    for (std::size_t j = 0; j < b_.size(); ++j) common[j] = static_cast<int>(j);
    return rec(k, common, used_a, used_b, left, right);
  }

  bool aborted() const { return aborted_; }

 private:
  // common: indices into b_ adjacent to every left vertex chosen so far.
  bool rec(int k, const std::vector<int>& common, std::vector<char>& used_a,
           std::vector<char>& used_b, std::vector<int>& left,
           std::vector<int>& right) {
    const int placed = static_cast<int>(left.size());
    if (placed == k) return true;
    if (!budget_.tick()) {
      aborted_ = true;
      return false;
    }
    // b_placed must lie in common; the later k - placed - 1 right vertices
    // must also be adjacent to the new left vertex.
    int free_common = 0;
    for (int j : common)
      if (!used_b[j]) ++free_common;
    if (free_common < k - placed) return false;

    for (int j : common) {
      if (used_b[j]) continue;
      used_b[j] = 1;
      right.push_back(b_[j]);
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (used_a[i]) continue;
        std::vector<int> next;
        for (int c : common)
          if (!used_b[c] && g_.adjacent(a_[i], b_[c])) next.push_back(c);
        if (static_cast<int>(next.size()) < k - placed - 1) continue;
        used_a[i] = 1;
        left.push_back(a_[i]);
        if (rec(k, next, used_a, used_b, left, right)) return true;
        left.pop_back();
        used_a[i] = 0;
        if (aborted_) break;
      }
      right.pop_back();
      used_b[j] = 0;
      if (aborted_) return false;
    }
    return false;
  }

  const UGraph& g_;
  std::vector<int> a_;
  std::vector<int> b_;
  Budget& budget_;
  bool aborted_ = false;
};

// Grows a half graph by always keeping the right vertex least useful to
// the remaining left vertices and the left vertex that keeps the most
// common neighbours.
void greedy_half(const UGraph& g, const VertexSet& a, const VertexSet& b,
                 std::vector<int>& left, std::vector<int>& right) {
  left.clear();
  right.clear();
  std::vector<int> free_a(a.begin(), a.end());
  std::vector<int> common(b.begin(), b.end());
  while (!free_a.empty() && !common.empty()) {
    // Pick b_k: fewest neighbours among free left vertices.
    auto nb_count = [&](int y) {
      int c = 0;
      for (int x : free_a) c += g.adjacent(x, y);
      return c;
    };
    auto by = std::min_element(common.begin(), common.end(),
                               [&](int p, int q) {
                                 return nb_count(p) < nb_count(q);
                               });
    int y = *by;
    common.erase(by);
    // Pick a_k keeping the largest common neighbourhood.
    int best = -1, best_keep = -1;
    for (std::size_t i = 0; i < free_a.size(); ++i) {
      int keep = 0;
      for (int z : common) keep += g.adjacent(free_a[i], z);
      if (keep > best_keep) {
        best_keep = keep;
        best = static_cast<int>(i);
      }
    }
    int x = free_a[best];
    free_a.erase(free_a.begin() + best);
    left.push_back(x);
    right.push_back(y);
    std::erase_if(common, [&](int z) { return !g.adjacent(x, z); });
  }
}

}  // namespace

bool verify_half_graph(const UGraph& g, const std::vector<int>& left,
                       const std::vector<int>& right) {
  if (left.size() != right.size()) return false;
  std::vector<int> all(left);
  all.insert(all.end(), right.begin(), right.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = i + 1; j < right.size(); ++j)
      if (!g.adjacent(left[i], right[j])) return false;
  return true;
}

HalfOrderResult half_graph_order(const UGraph& g, const VertexSet& a,
                                 const VertexSet& b,
                                 const HalfOrderOptions& opts) {
  if (!a.valid_for(g.order()) || !b.valid_for(g.order()))
    throw std::invalid_argument("sides out of range");
  if (!a.disjoint_from(b)) throw std::invalid_argument("sides must be disjoint");
  HalfOrderResult res;
  const int bound = std::min(a.size(), b.size());
  if (bound == 0) {
    res.exact = true;
    return res;
  }
  Budget budget(opts.limits);
  HalfSearch search(g, a, b, budget);
  res.order = 1;
  res.left = {a.members()[0]};
  res.right = {b.members()[0]};
  bool exhausted_up_to_cap = true;
  std::vector<int> left, right;
  const int cap = std::min(bound, std::max(1, opts.exact_cap));
  for (int k = 2; k <= cap; ++k) {
    if (!search.find(k, left, right)) {
      if (search.aborted()) exhausted_up_to_cap = false;
      break;
    }
    res.order = k;
    res.left = left;
    res.right = right;
  }
  res.nodes = budget.nodes();
  const bool hit_cap = res.order == cap && cap < bound;
  if (!hit_cap) {
    res.exact = exhausted_up_to_cap;
    return res;
  }
  greedy_half(g, a, b, left, right);
  if (static_cast<int>(left.size()) > res.order) {
    res.order = static_cast<int>(left.size());
    res.left = left;
    res.right = right;
  }
  // Beyond the cap only the trivial upper bound min(|a|, |b|) is known.
  res.exact = res.order == bound;
  return res;
}

const char* to_string(RichPairKind kind) {
  switch (kind) {
    case RichPairKind::kEmptyPair:
      return "empty_pair";
    case RichPairKind::kHalfGraph:
      return "half_graph";
    case RichPairKind::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

// k-subset of a whose common non-neighbourhood in b has >= k members.
bool empty_biclique(const UGraph& g, const std::vector<int>& a,
                    const std::vector<int>& b, int k, std::size_t from,
                    std::vector<int>& chosen, const std::vector<int>& pool,
                    std::vector<int>& partner, Budget& budget, bool& aborted) {
  if (static_cast<int>(chosen.size()) == k) {
    partner.assign(pool.begin(), pool.begin() + k);
    return true;
  }
  if (!budget.tick()) {
    aborted = true;
    return false;
  }
  for (std::size_t i = from; i < a.size(); ++i) {
    if (a.size() - i < k - chosen.size()) break;
    std::vector<int> next;
    for (int y : pool)
      if (!g.adjacent(a[i], y)) next.push_back(y);
    if (static_cast<int>(next.size()) < k) continue;
    chosen.push_back(a[i]);
    if (empty_biclique(g, a, b, k, i + 1, chosen, next, partner, budget,
                       aborted))
      return true;
    chosen.pop_back();
    if (aborted) return false;
  }
  return false;
}

}  // namespace

RichPairVerdict rich_pair_surrogate(const UGraph& g, const VertexSet& a,
                                    const VertexSet& b, int k,
                                    SearchLimits limits) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (a.size() < k || b.size() < k)
    throw std::invalid_argument("both sides need at least k vertices");
  if (!a.disjoint_from(b)) throw std::invalid_argument("sides must be disjoint");
  RichPairVerdict v;
  Budget budget(limits);
  bool aborted = false;
  std::vector<int> chosen, partner;
  if (empty_biclique(g, a.members(), b.members(), k, 0, chosen, b.members(),
                     partner, budget, aborted)) {
    v.kind = RichPairKind::kEmptyPair;
    v.left = chosen;
    v.right = partner;
    v.nodes = budget.nodes();
    return v;
  }
  if (!aborted) {
    HalfSearch search(g, a, b, budget);
    std::vector<int> left, right;
    if (k == 1 || search.find(k, left, right)) {
      v.kind = RichPairKind::kHalfGraph;
      if (k == 1) {
        left = {a.members()[0]};
        right = {b.members()[0]};
      }
      v.left = left;
      v.right = right;
    }
  }
  v.nodes = budget.nodes();
  return v;
}

UGraph BipartitePattern::as_graph() const {
  UGraph g(order());
  for (auto [l, r] : cross_edges) {
    if (l < 0 || l >= left_size || r < 0 || r >= right_size)
      throw std::invalid_argument("pattern edge out of range");
    g.add_edge(l, left_size + r);
  }
  return g;
}

namespace {

class InducedSearch {
 public:
  InducedSearch(const UGraph& host, const UGraph& pat, int left_size,
                const VertexSet& left_class, const VertexSet& right_class,
                Budget& budget)
      : h_(host), p_(pat), left_size_(left_size), budget_(budget) {
    cand_.resize(p_.order());
    // Degree signature: a pattern vertex needs at least as many host
    // neighbours in the opposite class as it has pattern neighbours.
    for (int v = 0; v < p_.order(); ++v) {
      const VertexSet& own = v < left_size_ ? left_class : right_class;
      const VertexSet& other = v < left_size_ ? right_class : left_class;
      for (int x : own) {
        int deg = 0;
        for (int y : h_.neighbours(x)) deg += other.contains(y);
        if (deg >= p_.degree(v)) cand_[v].push_back(x);
      }
    }
  }

  bool run(std::vector<int>& map) {
    map.assign(p_.order(), -1);
    used_.assign(h_.order(), 0);
    return rec(0, map);
  }
  bool aborted() const { return aborted_; }

 private:
  bool rec(int v, std::vector<int>& map) {
    if (v == p_.order()) return true;
    if (!budget_.tick()) {
      aborted_ = true;
      return false;
    }
    for (int x : cand_[v]) {
      if (used_[x]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = p_.adjacent(u, v) == h_.adjacent(map[u], x);
      if (!ok) continue;
      map[v] = x;
      used_[x] = 1;
      if (rec(v + 1, map)) return true;
      used_[x] = 0;
      map[v] = -1;
      if (aborted_) return false;
    }
    return false;
  }

  const UGraph& h_;
  const UGraph& p_;
  int left_size_;
  Budget& budget_;
  std::vector<std::vector<int>> cand_;
  std::vector<char> used_;
  bool aborted_ = false;
};

}  // namespace

EmbeddingResult balanced_induced_embed(const PartitionedGraph& host,
                                       const BipartitePattern& pattern,
                                       SearchLimits limits) {
  if (host.class_count() != 2)
    throw std::invalid_argument("host must have exactly two classes");
  if (pattern.left_size < 1 || pattern.right_size < 1)
    throw std::invalid_argument("pattern sides must be nonempty");
  host.validate();
  const UGraph pat = pattern.as_graph();
  EmbeddingResult res;
  Budget budget(limits);
  for (int left_class = 0; left_class < 2; ++left_class) {
    InducedSearch search(host.graph, pat, pattern.left_size,
                         host.classes[left_class],
                         host.classes[1 - left_class], budget);
    std::vector<int> map;
    if (search.run(map)) {
      if (!res.report || map < res.report->map)
        res.report = EmbeddingReport{EmbeddingKind::kInduced, map, left_class};
    } else if (search.aborted()) {
      res.exact = false;
    }
  }
  res.nodes = budget.nodes();
  return res;
}

bool verify_embedding(const PartitionedGraph& host,
                      const BipartitePattern& pattern,
                      const EmbeddingReport& report) {
  const UGraph pat = pattern.as_graph();
  const int n = pat.order();
  if (static_cast<int>(report.map.size()) != n) return false;
  if (report.left_class < 0 || report.left_class > 1) return false;
  std::vector<int> sorted(report.map);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (int x : report.map)
    if (x < 0 || x >= host.graph.order()) return false;
  for (int p = 0; p < n; ++p) {
    int cls = p < pattern.left_size ? report.left_class : 1 - report.left_class;
    if (!host.classes[cls].contains(report.map[p])) return false;
  }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      bool pe = pat.adjacent(p, q);
      bool he = host.graph.adjacent(report.map[p], report.map[q]);
      if (pe && !he) return false;
      if (report.kind == EmbeddingKind::kInduced && !pe && he) return false;
    }
  return true;
}

}  // namespace tlab
