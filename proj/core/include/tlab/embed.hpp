// SPDX-License-Identifier: Apache-2.0
//
// Finite analyzers for half-graph and bipartite embeddings between vertex
// classes.

#ifndef TLAB_EMBED_HPP_
#define TLAB_EMBED_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tlab/budget.hpp"
#include "tlab/constructions.hpp"

namespace tlab {

struct HalfOrderOptions {
  int exact_cap = 6;
  SearchLimits limits = SearchLimits::nodes(20'000'000);
};

struct HalfOrderResult {
  int order = 0;
  bool exact = false;
  // left[i] ~ right[j] in g for every i < j.
  std::vector<int> left;
  std::vector<int> right;
  uint64_t nodes = 0;
};

// Largest k such that H_{k,k} maps into g[a,b] as a subgraph: distinct
// a_1..a_k in a and b_1..b_k in b with a_i ~ b_j whenever i < j. Searched
// exactly up to exact_cap, greedily beyond. The order is at least 1 when
// both sides are nonempty, since a single pair carries no constraint.
HalfOrderResult half_graph_order(const UGraph& g, const VertexSet& a,
                                 const VertexSet& b,
                                 const HalfOrderOptions& opts = {});

// Does (left, right) witness a half graph of its length in g?
bool verify_half_graph(const UGraph& g, const std::vector<int>& left,
                       const std::vector<int>& right);

enum class RichPairKind { kEmptyPair, kHalfGraph, kInconclusive };
const char* to_string(RichPairKind kind);

struct RichPairVerdict {
  RichPairKind kind = RichPairKind::kInconclusive;
  // kEmptyPair: k-subsets of a and b with no edge between them.
  // kHalfGraph: the ordered half-graph sequences of length k.
  std::vector<int> left;
  std::vector<int> right;
  uint64_t nodes = 0;
};

// Either a cross-empty k x k pair, or failing that a half graph of order k,
// or inconclusive when neither exists or the budget runs out.
RichPairVerdict rich_pair_surrogate(
    const UGraph& g, const VertexSet& a, const VertexSet& b, int k,
    SearchLimits limits = SearchLimits::nodes(20'000'000));

// Bipartite pattern on left vertices 0..left_size-1 and right vertices
// left_size..left_size+right_size-1. Edges are (left index, right index)
// with right indices counted from 0.
struct BipartitePattern {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::pair<int, int>> cross_edges;

  int order() const { return left_size + right_size; }
  UGraph as_graph() const;
};

enum class EmbeddingKind { kSubgraph, kInduced };

struct EmbeddingReport {
  EmbeddingKind kind = EmbeddingKind::kInduced;
  // map[p] is the host image of pattern vertex p (in as_graph() labels).
  std::vector<int> map;
  // Class receiving the left side; the right side goes to the other one.
  int left_class = 0;
};

struct EmbeddingResult {
  std::optional<EmbeddingReport> report;
  bool exact = true;  // false when the budget cut the search short
  uint64_t nodes = 0;
};

// Induced embedding of the pattern into a two-class host with the left side
// inside one class and the right side inside the other. Both assignments
// are searched and the lexicographically least map wins.
EmbeddingResult balanced_induced_embed(
    const PartitionedGraph& host, const BipartitePattern& pattern,
    SearchLimits limits = SearchLimits::nodes(50'000'000));

bool verify_embedding(const PartitionedGraph& host,
                      const BipartitePattern& pattern,
                      const EmbeddingReport& report);

}  // namespace tlab

#endif  // TLAB_EMBED_HPP_
