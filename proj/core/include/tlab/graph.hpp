// SPDX-License-Identifier: Apache-2.0
//
// Graph values shared by every module: undirected graphs (UGraph), loop-free
// digraphs on at most 128 vertices (BitDigraph), and the clique,
// independence and transitivity predicates built on them.

#ifndef TLAB_GRAPH_HPP_
#define TLAB_GRAPH_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tlab/bitset.hpp"
#include "tlab/budget.hpp"

namespace tlab {

// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs);
  explicit VertexSet(std::vector<int> vs);

  static VertexSet range(int begin, int end);
  static VertexSet from_bits(const DynBitset& bits);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // Every member lies in [0, order).
  bool valid_for(int order) const;
  bool disjoint_from(const VertexSet& other) const;
  DynBitset to_bits(int order) const;

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<int> members_;
};

// Loop-free undirected graph. Neighbour lists are always kept sorted; graphs
// of order <= kDenseLimit additionally carry bitset rows, which the
// bit-parallel searches use.
class UGraph {
 public:
  static constexpr int kMaxOrder = 1 << 16;
  static constexpr int kDenseLimit = 4096;

  UGraph() = default;
  explicit UGraph(int order);

  static UGraph empty(int n) { return UGraph(n); }
  static UGraph complete(int n);
  static UGraph cycle(int n);
  static UGraph path(int n);

  int order() const { return order_; }
  std::size_t edge_count() const { return edge_count_; }

  // Returns false if the edge was already present. Throws
  // std::invalid_argument on a self-loop or an out-of-range endpoint.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);
  bool adjacent(int u, int v) const;
  std::span<const int> neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Appends an isolated vertex and returns its index.
  int add_vertex();

  bool dense() const { return order_ <= kDenseLimit; }
  const DynBitset& row(int v) const { return rows_[v]; }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  UGraph induced(const VertexSet& s) const;

  bool operator==(const UGraph& o) const {
    return order_ == o.order_ && adj_ == o.adj_;
  }

 private:
  int order_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<DynBitset> rows_;
};

// Loop-free digraph on at most 128 vertices; 2-cycles are allowed.
class BitDigraph {
 public:
  static constexpr int kMaxOrder = Mask128::kBits;

  BitDigraph() = default;
  explicit BitDigraph(int order);

  static BitDigraph empty(int n) { return BitDigraph(n); }
  static BitDigraph directed_cycle(int n);
  static BitDigraph transitive_tournament(int n);
  // Every ordered pair is an arc, so every pair is a 2-cycle.
  static BitDigraph complete(int n);

  int order() const { return order_; }
  Mask128 vertices() const { return Mask128::first_n(order_); }

  void add_arc(int u, int v);
  void remove_arc(int u, int v);
  bool has_arc(int u, int v) const { return out_[u].test(v); }
  Mask128 out(int v) const { return out_[v]; }
  Mask128 in(int v) const { return in_[v]; }
  // Vertices joined to v by an arc in either direction.
  Mask128 adjacent(int v) const { return out_[v] | in_[v]; }
  int arc_count() const;

  // Copy with one extra vertex (index order()) whose out- and in-neighbours
  // among the existing vertices are given.
  BitDigraph with_vertex(Mask128 out_of_new, Mask128 into_new) const;
  BitDigraph without_vertex(int v) const;
  // perm[v] is the new label of vertex v.
  BitDigraph relabel(std::span<const int> perm) const;
  UGraph underlying() const;

  bool operator==(const BitDigraph& o) const;

 private:
  int order_ = 0;
  std::vector<Mask128> out_;
  std::vector<Mask128> in_;
};

// ---- undirected predicates ----

// Lexicographically least k-clique, if any. k >= 1.
std::optional<std::vector<int>> find_clique(const UGraph& g, int k);
bool has_clique(const UGraph& g, int k);

bool is_independent(const UGraph& g, const VertexSet& s);
bool is_clique(const UGraph& g, const VertexSet& s);

struct IndependenceOptions {
  int max_order = 64;
  SearchLimits limits = SearchLimits::nodes(200'000'000);
};

struct IndependenceResult {
  int size = 0;
  VertexSet witness;
  uint64_t nodes = 0;
};

// Exact maximum independent set by branch and bound with a clique-cover
// bound. Throws BudgetExceeded if order > max_order or the node limit hits.
IndependenceResult max_independent_set(const UGraph& g,
                                       const IndependenceOptions& opts = {});
int independence_number(const UGraph& g, const IndependenceOptions& opts = {});

// ---- digraph predicates ----

// Lexicographically least ordered tuple v_1..v_n of distinct vertices with
// v_i -> v_j for all i < j. Back-arcs are permitted.
std::optional<std::vector<int>> find_transitive_tuple(const BitDigraph& d,
                                                      int n);
bool has_transitive_set(const BitDigraph& d, int n);

// Same search restricted to tuples drawn from `candidates`.
std::optional<std::vector<int>> find_transitive_tuple_in(const BitDigraph& d,
                                                         Mask128 candidates,
                                                         int n);

// Lexicographically least m-set with no arc between any two members.
std::optional<std::vector<int>> find_digraph_independent(const BitDigraph& d,
                                                         int m);
bool digraph_independent(const BitDigraph& d, int m);
std::optional<std::vector<int>> find_digraph_independent_in(
    const BitDigraph& d, Mask128 candidates, int m);

}  // namespace tlab

#endif  // TLAB_GRAPH_HPP_
