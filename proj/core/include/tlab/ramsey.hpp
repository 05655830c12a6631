// SPDX-License-Identifier: Apache-2.0
//
// Directed Ramsey numbers dr(n,m): the least r such that every loop-free
// digraph on r vertices has a transitive n-tuple or an independent m-set.
//
// dr(n,m) is computed as one more than the largest order admitting a
// counterexample. Counterexamples are enumerated up to isomorphism by
// canonical augmentation (one vertex at a time, each new vertex taking one
// of {none, forward, backward, both} against every earlier vertex); the
// value is exact once an order is exhausted without finding any.

#ifndef TLAB_RAMSEY_HPP_
#define TLAB_RAMSEY_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlab/budget.hpp"
#include "tlab/graph.hpp"

namespace tlab {

struct DrCertificate {
  int n = 0;
  int m = 0;
  BitDigraph digraph;
  bool verified_no_transitive = false;
  bool verified_no_independent = false;

  int order() const { return digraph.order(); }
  bool verified() const {
    return verified_no_transitive && verified_no_independent;
  }
};

// Throws NotACounterexample carrying the transitive tuple or independent set.
DrCertificate check_counterexample(const BitDigraph& d, int n, int m);

enum class ProofMethod { kExhaustive, kBoundTable, kRecurrence };
const char* to_string(ProofMethod method);

struct DrResult {
  int n = 0;
  int m = 0;
  int lower = 1;
  int upper = 1;
  bool exact = false;
  std::optional<DrCertificate> certificate;
  ProofMethod proof_method = ProofMethod::kBoundTable;
  uint64_t nodes = 0;
  bool budget_exhausted = false;
  // Isomorphism classes of counterexamples per order, as far as the
  // exhaustive enumeration got. classes_per_order[k] counts order k.
  std::vector<uint64_t> classes_per_order;
  // Largest order whose counterexamples were all enumerated.
  int exhausted_through = 0;
};

// Classical Ramsey numbers R(n_0, ..., n_{k-1}) as exact values or intervals.
class RamseyTable {
 public:
  struct Entry {
    int lower = 0;
    int upper = 0;
    bool verified = false;  // confirmed by local brute force
  };

  // R(3,3)=6, R(3,4)=9, R(3,3,3)=17 as literature values.
  static RamseyTable with_literature();

  // Normalises the arguments (order, size-1 and size-2 entries) first.
  std::optional<Entry> lookup(std::vector<int> sizes) const;
  void set(std::vector<int> sizes, Entry entry);
  // Brute-force confirmation for two-colour entries small enough to
  // enumerate (at most 2^21 colourings). Returns true and marks the entry
  // verified when the stored value checks out.
  bool verify_locally(std::vector<int> sizes);

  static std::vector<int> normalise(std::vector<int> sizes);

 private:
  std::map<std::vector<int>, Entry> entries_;
};

// True iff every red/blue colouring of the pairs of an r-set has a red
// s-clique or a blue t-clique. Enumerates all 2^C(r,2) colourings.
bool classical_ramsey_holds(int s, int t, int r);

using DrKnown = std::map<std::pair<int, int>, int>;

struct DrInterval {
  int lower = 1;
  int upper = 1;
  std::string lower_source;
  std::string upper_source;
};

// Tightest interval derivable from the base cases, the recurrence
// dr(n,m) <= 2 dr(n-1,m) + dr(n,m-1) - 1, the Ramsey sandwich
// R(n,m) <= dr(n,m) <= R(n,n,m), the m = 2 power bounds, monotonicity and
// the exact values in `known`.
DrInterval dr_bounds(int n, int m, const RamseyTable& table,
                     const DrKnown& known = {});

struct EnumerationReport {
  uint64_t nodes = 0;
  bool complete = false;  // false if the budget ran out
  int max_order_found = 0;
  std::vector<uint64_t> classes_per_order;
  std::optional<BitDigraph> best;  // a counterexample of max_order_found
};

// Visits one representative of every isomorphism class of digraphs of
// order 1..max_order having no transitive n-tuple and no independent m-set.
// Pass m > max_order to drop the independence constraint. The visitor may
// be called concurrently when threads > 1.
EnumerationReport enumerate_counterexamples(
    int n, int m, int max_order, Budget& budget, int threads = 1,
    const std::function<void(const BitDigraph&)>& visit = {});

// Circulant digraphs on Z_order (arc i -> i+d for d in the connection set):
// first counterexample in ascending connection-set order, if any.
std::optional<BitDigraph> find_circulant_counterexample(int n, int m,
                                                        int order);

struct AnnealOptions {
  uint64_t seed = 1;
  int restarts = 4;
  int iterations = 200'000;
};

// Simulated annealing over arc states for a counterexample of exactly
// `order` vertices. The cost is the number of transitive n-tuples plus
// independent m-sets; a zero-cost digraph is returned. Deterministic for a
// given seed. Each iteration ticks `budget` when one is supplied.
std::optional<BitDigraph> anneal_counterexample(int n, int m, int order,
                                                const AnnealOptions& opts = {},
                                                Budget* budget = nullptr);

struct DrSearchOptions {
  int max_order = 128;
  SearchLimits limits = {};
  int threads = 1;
  // Circulants up to this order are tried before the exhaustive search.
  bool probe_circulants = true;
  // Annealing climbs one order at a time above the best certificate and
  // stops at the first order where it fails.
  bool probe_anneal = true;
  AnnealOptions anneal = {};
};

DrResult search_dr(int n, int m, const DrSearchOptions& opts = {});

}  // namespace tlab

#endif  // TLAB_RAMSEY_HPP_
