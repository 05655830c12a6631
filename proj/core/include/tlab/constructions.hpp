// SPDX-License-Identifier: Apache-2.0
//
// Witness-graph generators: layered blowups of digraphs, bipartite
// families, tensor blowups, shift graphs, finite Henson approximations and
// the two partition witnesses built by enumerating pairs of finite sets.
//
// The infinite objects these approximate are indexed by all finite subset
// pairs of a countable set. Every generator here takes the truncation
// parameter explicitly (depth, rounds, pair budget) and is deterministic.

#ifndef TLAB_CONSTRUCTIONS_HPP_
#define TLAB_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tlab/graph.hpp"

namespace tlab {

// A graph together with an ordered list of disjoint classes covering V.
struct PartitionedGraph {
  UGraph graph;
  std::vector<VertexSet> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
  // Class index of every vertex; throws std::invalid_argument unless the
  // classes are disjoint, in range and cover every vertex.
  std::vector<int> class_of() const;
  void validate() const;
};

// Vertex (i, s) of the layered graph has index i * depth + s. Edge between
// (i,s) and (j,u) iff i -> j and s < u, or j -> i and u < s. Class i is
// {i} x depth.
PartitionedGraph layered_from_digraph(const BitDigraph& d, int depth);
inline int layered_vertex(int i, int s, int depth) { return i * depth + s; }

// Two-class bipartite graphs on sides {(0,a)} = a and {(1,b)} = k + b.
// half_graph joins (0,a) to (1,b) exactly when a < b.
PartitionedGraph half_graph(int k);
PartitionedGraph complete_bipartite(int k);
PartitionedGraph empty_bipartite(int k);

// (u,v) has index u * |h| + v; adjacent iff (u == u' and vv' in E(h)) or
// uu' in E(g).
UGraph tensor(const UGraph& g, const UGraph& h);

struct ShiftGraph {
  UGraph graph;
  // subsets[v] is the ascending n-subset labelling vertex v; vertices are
  // listed in lexicographic order of their subsets.
  std::vector<std::vector<int>> subsets;
};

// Vertices are n-subsets of {0..N-1}; {x_0..x_{n-1}} ~ {x_1..x_n} for every
// ascending x_0 < ... < x_n. Throws CapExceeded if C(N,n) > vertex_cap.
ShiftGraph shift_graph(int n, int N, int vertex_cap = 100'000);

// Pairs (A, B) of disjoint subsets of {0..pool-1} with |A|+|B| <= max_total,
// ordered by total size, then by the lexicographic order of A u B, then by
// the split mask (bit i set puts the i-th element of A u B into B).
class DisjointPairEnumerator {
 public:
  DisjointPairEnumerator(int pool, int max_total);

  // Writes the next pair and returns true, or returns false when done.
  bool next(std::vector<int>& a, std::vector<int>& b);

 private:
  bool advance_subset();

  int pool_;
  int max_total_;
  int size_ = 0;
  std::vector<int> subset_;
  uint64_t split_ = 0;
  bool started_ = false;
  bool done_ = false;
};

struct HensonOptions {
  int pair_cap = 3;            // max |A u B| per sweep
  int vertex_budget = 50'000;  // CapExceeded beyond this
  uint64_t rng_seed = 0;       // 0 keeps the canonical pair order
};

struct HensonResult {
  UGraph graph;
  // Vertex count before the final sweep; the extension property is
  // guaranteed over {0..pre_sweep_order-1}.
  int pre_sweep_order = 0;
};

// Breadth-first extension-property saturation of a K_n-free seed. In each
// sweep every disjoint pair (A, B) over the pre-sweep vertices with
// |A u B| <= pair_cap and B inducing a K_{n-1}-free graph gets a vertex
// outside A u B adjacent to all of B and none of A; an existing vertex is
// reused when one qualifies, otherwise a fresh vertex adjacent to exactly B
// is appended.
HensonResult henson_approx(int n, int rounds, const UGraph& seed,
                           const HensonOptions& opts = {});

// Does some vertex outside A u B dominate B and avoid A?
bool has_extension_witness(const UGraph& g, const std::vector<int>& a,
                           const std::vector<int>& b);

// First (A, B) over {0..pool-1} with |A u B| <= cap and B K_{n-1}-free that
// has no extension witness in g, if any.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
find_extension_failure(const UGraph& g, int n, int pool, int cap);

// Finite truncation of the partition-extension construction. pair_budget
// fresh vertices W are appended to g; the first pair_budget disjoint pairs
// (a_k, b_k) over V(g) u W are processed in enumeration order, and each b_k
// that is K_{n-1}-free receives a so-far isolated W vertex outside
// a_k u b_k joined to all of b_k. Returns classes V_0 = W u a, V_1 = b.
// V(g) keeps its labels, so g embeds induced by the identity.
PartitionedGraph partition_extension_witness(const UGraph& g,
                                             const VertexSet& a,
                                             const VertexSet& b, int n,
                                             int pair_budget);

// Vertex (k, i) of the Rado witness has index i * depth + k.
inline int rado_vertex(int k, int i, int depth) { return i * depth + k; }

struct RadoWitness {
  PartitionedGraph pg;
  // m_n for every processed pair, in order.
  std::vector<int> m_values;
  int pairs_processed = 0;
};

// Finite truncation of the Rado partition witness on {0..depth-1} x {0,1}:
// start from the half graph ((k,0) ~ (l,1) iff k < l), walk the pairs
// (a_n, b_n) over the 2*depth vertices, set
// m_n = max{k : (k,i) in a_n u b_n} + m_{n-1} + 1 with m_{-1} = 0 (the max
// of an empty set taken as 0), and join (m_n, 0) to every member of a_n.
// Stops at the first m_n >= depth. Classes are the rows.
RadoWitness rado_partition_witness(int depth);

}  // namespace tlab

#endif  // TLAB_CONSTRUCTIONS_HPP_
