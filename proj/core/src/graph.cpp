// SPDX-License-Identifier: Apache-2.0

#include "tlab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tlab/errors.hpp"

namespace tlab {

// ---- VertexSet ----

VertexSet::VertexSet(std::initializer_list<int> vs)
    : VertexSet(std::vector<int>(vs)) {}

VertexSet::VertexSet(std::vector<int> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

VertexSet VertexSet::range(int begin, int end) {
  std::vector<int> v;
  for (int i = begin; i < end; ++i) v.push_back(i);
  return VertexSet(std::move(v));
}

VertexSet VertexSet::from_bits(const DynBitset& bits) {
  std::vector<int> v;
  bits.for_each([&](int x) { v.push_back(x); });
  return VertexSet(std::move(v));
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::valid_for(int order) const {
  return members_.empty() || (members_.front() >= 0 && members_.back() < order);
}

bool VertexSet::disjoint_from(const VertexSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a;
    else ++b;
  }
  return true;
}

DynBitset VertexSet::to_bits(int order) const {
  DynBitset b(order);
  for (int v : members_) b.set(v);
  return b;
}

// ---- UGraph ----

UGraph::UGraph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder)
    throw std::invalid_argument("graph order out of range: " +
                                std::to_string(order));
  adj_.resize(order);
  if (dense()) rows_.assign(order, DynBitset(order));
}

UGraph UGraph::complete(int n) {
  UGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

UGraph UGraph::cycle(int n) {
  UGraph g(n);
  if (n >= 3)
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

UGraph UGraph::path(int n) {
  UGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

bool UGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  if (dense()) {
    rows_[u].set(v);
    rows_[v].set(u);
  }
  ++edge_count_;
  return true;
}

bool UGraph::remove_edge(int u, int v) {
  if (!adjacent(u, v)) return false;
  auto& au = adj_[u];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  if (dense()) {
    rows_[u].reset(v);
    rows_[v].reset(u);
  }
  --edge_count_;
  return true;
}

bool UGraph::adjacent(int u, int v) const {
  if (dense()) return rows_[u].test(v);
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

int UGraph::add_vertex() {
  if (order_ + 1 > kMaxOrder) throw CapExceeded("graph order cap reached");
  int v = order_;
  UGraph grown(order_ + 1);
  for (int u = 0; u < order_; ++u)
    for (int w : adj_[u])
      if (u < w) grown.add_edge(u, w);
  *this = std::move(grown);
  return v;
}

std::vector<std::pair<int, int>> UGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

UGraph UGraph::induced(const VertexSet& s) const {
  std::vector<int> index(order_, -1);
  int k = 0;
  for (int v : s) index[v] = k++;
  UGraph h(k);
  for (int v : s)
    for (int w : adj_[v])
      if (index[w] > index[v]) h.add_edge(index[v], index[w]);
  return h;
}

// ---- BitDigraph ----

BitDigraph::BitDigraph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder)
    throw std::invalid_argument("digraph order out of range: " +
                                std::to_string(order));
  out_.resize(order);
  in_.resize(order);
}

BitDigraph BitDigraph::directed_cycle(int n) {
  BitDigraph d(n);
  if (n >= 2)
    for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
  return d;
}

BitDigraph BitDigraph::transitive_tournament(int n) {
  BitDigraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
  return d;
}

BitDigraph BitDigraph::complete(int n) {
  BitDigraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d.add_arc(u, v);
  return d;
}

void BitDigraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_)
    throw std::invalid_argument("arc endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  out_[u].set(v);
  in_[v].set(u);
}

void BitDigraph::remove_arc(int u, int v) {
  out_[u].reset(v);
  in_[v].reset(u);
}

int BitDigraph::arc_count() const {
  int c = 0;
  for (const auto& m : out_) c += m.count();
  return c;
}

BitDigraph BitDigraph::with_vertex(Mask128 out_of_new, Mask128 into_new) const {
  if (order_ >= kMaxOrder) throw CapExceeded("digraph order cap reached");
  BitDigraph d = *this;
  int v = order_;
  ++d.order_;
  d.out_.push_back(out_of_new);
  d.in_.push_back(into_new);
  out_of_new.for_each([&](int u) { d.in_[u].set(v); });
  into_new.for_each([&](int u) { d.out_[u].set(v); });
  return d;
}

BitDigraph BitDigraph::without_vertex(int v) const {
  std::vector<int> keep_index(order_, -1);
  int k = 0;
  for (int u = 0; u < order_; ++u)
    if (u != v) keep_index[u] = k++;
  BitDigraph d(order_ - 1);
  for (int u = 0; u < order_; ++u) {
    if (u == v) continue;
    out_[u].for_each([&](int w) {
      if (w != v) d.add_arc(keep_index[u], keep_index[w]);
    });
  }
  return d;
}

BitDigraph BitDigraph::relabel(std::span<const int> perm) const {
  BitDigraph d(order_);
  for (int u = 0; u < order_; ++u)
    out_[u].for_each([&](int w) { d.add_arc(perm[u], perm[w]); });
  return d;
}

UGraph BitDigraph::underlying() const {
  UGraph g(order_);
  for (int u = 0; u < order_; ++u)
    adjacent(u).above(u).for_each([&](int w) { g.add_edge(u, w); });
  return g;
}

bool BitDigraph::operator==(const BitDigraph& o) const {
  return order_ == o.order_ && out_ == o.out_;
}

// ---- undirected predicates ----

namespace {

bool clique_dense(const UGraph& g, DynBitset cand, int need,
                  std::vector<int>& chosen) {
  if (need == 0) return true;
  while (cand.count() >= need) {
    int v = cand.first();
    cand.reset(v);
    DynBitset next = cand & g.row(v);
    chosen.push_back(v);
    if (clique_dense(g, std::move(next), need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

bool clique_sparse(const UGraph& g, std::vector<int> cand, int need,
                   std::vector<int>& chosen) {
  if (need == 0) return true;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (static_cast<int>(cand.size() - i) < need) return false;
    int v = cand[i];
    std::vector<int> next;
    auto nb = g.neighbours(v);
    std::set_intersection(cand.begin() + static_cast<long>(i) + 1, cand.end(),
                          nb.begin(), nb.end(), std::back_inserter(next));
    chosen.push_back(v);
    if (clique_sparse(g, std::move(next), need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_clique(const UGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be >= 1");
  if (k > g.order()) return std::nullopt;
  std::vector<int> chosen;
  bool found;
  if (g.dense()) {
    found = clique_dense(g, DynBitset::full(g.order()), k, chosen);
  } else {
    std::vector<int> all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    found = clique_sparse(g, std::move(all), k, chosen);
  }
  if (!found) return std::nullopt;
  return chosen;
}

bool has_clique(const UGraph& g, int k) { return find_clique(g, k).has_value(); }

bool is_independent(const UGraph& g, const VertexSet& s) {
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (g.adjacent(m[i], m[j])) return false;
  return true;
}

bool is_clique(const UGraph& g, const VertexSet& s) {
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.adjacent(m[i], m[j])) return false;
  return true;
}

namespace {

class MisSearch {
 public:
  MisSearch(const UGraph& g, Budget& budget) : g_(g), budget_(budget) {}

  void run() {
    std::vector<int> chosen;
    expand(DynBitset::full(g_.order()), chosen);
  }

  int best_size() const { return static_cast<int>(best_.size()); }
  const std::vector<int>& best() const { return best_; }

 private:
  // Number of greedy cliques needed to cover `cand`; an independent set
  // takes at most one vertex from each.
  int clique_cover_bound(DynBitset cand) const {
    int cliques = 0;
    while (cand.any()) {
      int v = cand.first();
      cand.reset(v);
      DynBitset pool = cand & g_.row(v);
      while (pool.any()) {
        int w = pool.first();
        cand.reset(w);
        pool &= g_.row(w);
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(DynBitset cand, std::vector<int>& chosen) {
    if (!budget_.tick()) throw BudgetExceeded("independent set search budget");
    if (cand.none()) {
      if (chosen.size() > best_.size()) best_ = chosen;
      return;
    }
    if (static_cast<int>(chosen.size()) + cand.count() <= best_size()) return;
    if (static_cast<int>(chosen.size()) + clique_cover_bound(cand) <=
        best_size())
      return;
    int v = cand.first();
    cand.reset(v);
    // Include v first so the first maximum found is lexicographically least.
    DynBitset with = cand;
    with.subtract(g_.row(v));
    chosen.push_back(v);
    expand(std::move(with), chosen);
    chosen.pop_back();
    expand(std::move(cand), chosen);
  }

  const UGraph& g_;
  Budget& budget_;
  std::vector<int> best_;
};

}  // namespace

IndependenceResult max_independent_set(const UGraph& g,
                                       const IndependenceOptions& opts) {
  if (g.order() > opts.max_order || !g.dense())
    throw BudgetExceeded("graph order " + std::to_string(g.order()) +
                         " exceeds exact independence budget " +
                         std::to_string(opts.max_order));
  Budget budget(opts.limits);
  MisSearch search(g, budget);
  search.run();
  return {search.best_size(), VertexSet(search.best()), budget.nodes()};
}

int independence_number(const UGraph& g, const IndependenceOptions& opts) {
  return max_independent_set(g, opts).size;
}

// ---- digraph predicates ----

namespace {

// Tuples are ordered, so a vertex that fails at one position may still
// appear later: only the chosen vertex leaves the candidate pool.
bool transitive_rec(const BitDigraph& d, Mask128 cand, int need,
                    std::vector<int>& chosen) {
  if (need == 0) return true;
  if (cand.count() < need) return false;
  Mask128 order = cand;
  while (order.any()) {
    int v = order.pop_first();
    chosen.push_back(v);
    if (transitive_rec(d, cand.without(Mask128::single(v)) & d.out(v),
                       need - 1, chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

bool independent_rec(const BitDigraph& d, Mask128 cand, int need,
                     std::vector<int>& chosen) {
  if (need == 0) return true;
  while (cand.count() >= need) {
    int v = cand.pop_first();
    chosen.push_back(v);
    if (independent_rec(d, cand.without(d.adjacent(v)), need - 1, chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_transitive_tuple_in(const BitDigraph& d,
                                                         Mask128 candidates,
                                                         int n) {
  if (n < 1) throw std::invalid_argument("transitive set size must be >= 1");
  std::vector<int> chosen;
  if (transitive_rec(d, candidates & d.vertices(), n, chosen)) return chosen;
  return std::nullopt;
}

std::optional<std::vector<int>> find_transitive_tuple(const BitDigraph& d,
                                                      int n) {
  return find_transitive_tuple_in(d, d.vertices(), n);
}

bool has_transitive_set(const BitDigraph& d, int n) {
  return find_transitive_tuple(d, n).has_value();
}

std::optional<std::vector<int>> find_digraph_independent_in(
    const BitDigraph& d, Mask128 candidates, int m) {
  if (m < 1) throw std::invalid_argument("independent set size must be >= 1");
  std::vector<int> chosen;
  if (independent_rec(d, candidates & d.vertices(), m, chosen)) return chosen;
  return std::nullopt;
}

std::optional<std::vector<int>> find_digraph_independent(const BitDigraph& d,
                                                         int m) {
  return find_digraph_independent_in(d, d.vertices(), m);
}

bool digraph_independent(const BitDigraph& d, int m) {
  return find_digraph_independent(d, m).has_value();
}

}  // namespace tlab
