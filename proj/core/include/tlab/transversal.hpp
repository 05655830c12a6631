// SPDX-License-Identifier: Apache-2.0
//
// Balanced independent transversals: given a partitioned graph, find an
// independent set meeting at least m classes in at least ell vertices each.

#ifndef TLAB_TRANSVERSAL_HPP_
#define TLAB_TRANSVERSAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tlab/budget.hpp"
#include "tlab/constructions.hpp"

namespace tlab {

struct TransversalQuery {
  int m = 1;
  int ell = 1;
};

enum class TransversalStatus { kFound, kNone, kBudget };
const char* to_string(TransversalStatus status);

struct TransversalResult {
  TransversalStatus status = TransversalStatus::kNone;
  std::optional<VertexSet> witness;
  // profile[i] = |witness n V_i|; all zero unless found.
  std::vector<int> profile;
  uint64_t nodes = 0;
};

struct TransversalOptions {
  SearchLimits limits = SearchLimits::nodes(50'000'000);
  int threads = 1;
};

// Exact search. The outer loop walks the m-subsets of classes in ascending
// lexicographic order; for each, exactly ell mutually independent vertices
// are picked per chosen class. A branch dies as soon as some chosen class
// has fewer surviving candidates than it still needs. With several threads
// the witness is still the one for the lexicographically first subset that
// admits one. Requires order <= UGraph::kDenseLimit.
TransversalResult find_transversal(const PartitionedGraph& pg,
                                   const TransversalQuery& q,
                                   const TransversalOptions& opts = {});

// Does `witness` certify (m, ell) on pg? Checks independence and counts.
bool verify_transversal(const PartitionedGraph& pg, const TransversalQuery& q,
                        const VertexSet& witness);

struct ProfileResult {
  // max m with a transversal lies in [lower, upper]; 0 means none at m=1.
  int lower = 0;
  int upper = 0;
  bool exact = false;
  std::optional<VertexSet> witness;  // for m = lower when lower > 0
  uint64_t nodes = 0;
};

// Largest m for which find_transversal succeeds at this ell, probing
// downward from the number of classes. A budget hit at some m leaves that
// m inside the bracketing interval instead of throwing.
ProfileResult max_profile(const PartitionedGraph& pg, int ell,
                          const TransversalOptions& opts = {});

enum class EstimateStrategy { kRandom, kLocalSearch, kExhaustive };
const char* to_string(EstimateStrategy s);

struct EstimateOptions {
  EstimateStrategy strategy = EstimateStrategy::kRandom;
  // Number of classes; 0 asks for the exact dr(n,m) from search_dr.
  int r = 0;
  uint64_t rng_seed = 1;
  int samples = 200;  // random graphs, or local-search restarts
  int steps = 400;    // edge flips per local-search restart
  SearchLimits limits = SearchLimits::nodes(20'000'000);
};

struct NEstimate {
  int n = 0, m = 0, ell = 0;
  int r = 0;
  int class_size = 0;
  EstimateStrategy strategy = EstimateStrategy::kRandom;
  // A K_n-free graph with r classes of size class_size and no (m, ell)
  // transversal; its presence implies N(n, m, ell) > class_size.
  std::optional<PartitionedGraph> best_counterexample;
  bool implied_greater = false;
  // For the exhaustive strategy: the space was fully searched, so absence
  // of a counterexample proves none exists at this class size.
  bool exhausted = false;
  int candidates_examined = 0;
  uint64_t nodes = 0;
};

NEstimate estimate_N(int n, int m, int ell, int class_size,
                     const EstimateOptions& opts = {});

// r equal classes of the given size: class i is {i*size, ..., i*size+size-1}.
std::vector<VertexSet> equal_classes(int r, int size);

}  // namespace tlab

#endif  // TLAB_TRANSVERSAL_HPP_
