// SPDX-License-Identifier: Apache-2.0

#include "tlab/transversal.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "tlab/errors.hpp"
#include "tlab/ramsey.hpp"

namespace tlab {

const char* to_string(TransversalStatus status) {
  switch (status) {
    case TransversalStatus::kFound:
      return "found";
    case TransversalStatus::kNone:
      return "none";
    case TransversalStatus::kBudget:
      return "budget";
  }
  return "?";
}

const char* to_string(EstimateStrategy s) {
  switch (s) {
    case EstimateStrategy::kRandom:
      return "random";
    case EstimateStrategy::kLocalSearch:
      return "local-search";
    case EstimateStrategy::kExhaustive:
      return "exhaustive";
  }
  return "?";
}

std::vector<VertexSet> equal_classes(int r, int size) {
  std::vector<VertexSet> out;
  for (int i = 0; i < r; ++i)
    out.push_back(VertexSet::range(i * size, (i + 1) * size));
  return out;
}

namespace {

// Solver state shared by every class subset of one query.
class SubsetSolver {
 public:
  SubsetSolver(const PartitionedGraph& pg, int ell, Budget& budget)
      : g_(pg.graph), ell_(ell), budget_(budget) {
    for (const auto& c : pg.classes) class_bits_.push_back(c.to_bits(g_.order()));
  }

  enum class Outcome { kFound, kNone, kBudget };

  Outcome solve(const std::vector<int>& subset, std::vector<int>& picked) {
    DynBitset allowed(g_.order());
    for (int c : subset) allowed |= class_bits_[c];
    std::vector<int> need(subset.size(), ell_);
    picked.clear();
    aborted_ = false;
    bool ok = rec(subset, allowed, need, picked);
    if (ok) return Outcome::kFound;
    return aborted_ ? Outcome::kBudget : Outcome::kNone;
  }

 private:
  bool rec(const std::vector<int>& subset, DynBitset& allowed,
           std::vector<int>& need, std::vector<int>& picked) {
    if (!budget_.tick()) {
      aborted_ = true;
      return false;
    }
    // Most constrained class first; any class short of candidates kills
    // the branch.
    int best = -1, best_slack = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (need[i] == 0) continue;
      int avail = allowed.count_and(class_bits_[subset[i]]);
      int slack = avail - need[i];
      if (slack < 0) return false;
      if (slack < best_slack) {
        best_slack = slack;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) return true;

    DynBitset cand = allowed & class_bits_[subset[best]];
    const int v = cand.first();

    // Include v.
    {
      DynBitset next = allowed;
      next.subtract(g_.row(v));
      next.reset(v);
      --need[best];
      picked.push_back(v);
      if (rec(subset, next, need, picked)) return true;
      picked.pop_back();
      ++need[best];
      if (aborted_) return false;
    }
    // Exclude v.
    if (best_slack == 0) return false;
    allowed.reset(v);
    bool ok = rec(subset, allowed, need, picked);
    allowed.set(v);
    return ok;
  }

  const UGraph& g_;
  int ell_;
  Budget& budget_;
  std::vector<DynBitset> class_bits_;
  bool aborted_ = false;
};

std::vector<std::vector<int>> class_subsets(int r, int m) {
  std::vector<std::vector<int>> out;
  if (m > r) return out;
  std::vector<int> cur(m);
  for (int i = 0; i < m; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[i] == r - m + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<int> profile_of(const PartitionedGraph& pg, const VertexSet& w) {
  std::vector<int> prof(pg.classes.size(), 0);
  for (std::size_t c = 0; c < pg.classes.size(); ++c)
    for (int v : w)
      if (pg.classes[c].contains(v)) ++prof[c];
  return prof;
}

}  // namespace

bool verify_transversal(const PartitionedGraph& pg, const TransversalQuery& q,
                        const VertexSet& witness) {
  if (!witness.valid_for(pg.graph.order())) return false;
  if (!is_independent(pg.graph, witness)) return false;
  int hit = 0;
  for (int c : profile_of(pg, witness))
    if (c >= q.ell) ++hit;
  return hit >= q.m;
}

TransversalResult find_transversal(const PartitionedGraph& pg,
                                   const TransversalQuery& q,
                                   const TransversalOptions& opts) {
  if (q.m < 1 || q.ell < 1) throw std::invalid_argument("need m, ell >= 1");
  if (!pg.graph.dense())
    throw std::invalid_argument("transversal search needs a dense graph");
  pg.validate();

  TransversalResult res;
  res.profile.assign(pg.classes.size(), 0);
  const auto subsets = class_subsets(pg.class_count(), q.m);
  Budget budget(opts.limits);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_index{subsets.size()};
  std::atomic<bool> any_budget{false};
  std::mutex mu;
  std::vector<int> best_pick;

  auto worker = [&] {
    SubsetSolver solver(pg, q.ell, budget);
    std::vector<int> picked;
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= subsets.size() || i > best_index.load()) return;
      auto outcome = solver.solve(subsets[i], picked);
      if (outcome == SubsetSolver::Outcome::kBudget) {
        any_budget = true;
        return;
      }
      if (outcome == SubsetSolver::Outcome::kFound) {
        std::lock_guard lock(mu);
        if (i < best_index.load()) {
          best_index = i;
          best_pick = picked;
        }
        return;
      }
    }
  };

  const int threads = std::max(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  res.nodes = budget.nodes();
  if (best_index.load() < subsets.size()) {
    res.status = TransversalStatus::kFound;
    res.witness = VertexSet(best_pick);
    res.profile = profile_of(pg, *res.witness);
  } else if (any_budget.load()) {
    res.status = TransversalStatus::kBudget;
  } else {
    res.status = TransversalStatus::kNone;
  }
  return res;
}

ProfileResult max_profile(const PartitionedGraph& pg, int ell,
                          const TransversalOptions& opts) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  ProfileResult out;
  out.upper = pg.class_count();
  bool clean = true;
  for (int m = pg.class_count(); m >= 1; --m) {
    auto r = find_transversal(pg, {m, ell}, opts);
    out.nodes += r.nodes;
    if (r.status == TransversalStatus::kFound) {
      out.lower = m;
      out.witness = r.witness;
      out.exact = clean;
      return out;
    }
    if (r.status == TransversalStatus::kNone) {
      if (clean) out.upper = m - 1;
    } else {
      clean = false;
    }
  }
  out.lower = 0;
  out.exact = clean;
  if (clean) out.upper = 0;
  return out;
}

namespace {

// Would edge uv complete a K_n? True iff the common neighbourhood holds a
// clique on n - 2 vertices.
bool clique_in(const UGraph& g, DynBitset cand, int k) {
  if (k <= 0) return true;
  if (cand.count() < k) return false;
  bool found = false;
  cand.for_each([&](int v) {
    if (found) return;
    DynBitset next = cand & g.row(v);
    // Only look above v to avoid revisiting the same clique.
    for (int u = 0; u <= v; ++u) next.reset(u);
    if (clique_in(g, std::move(next), k - 1)) found = true;
  });
  return found;
}

bool edge_creates_clique(const UGraph& g, int u, int v, int n) {
  if (n <= 2) return true;
  return clique_in(g, g.row(u) & g.row(v), n - 2);
}

struct Estimator {
  int n, m, ell, r, size;
  const EstimateOptions& opts;
  Budget budget;
  std::mt19937_64 rng;
  std::vector<VertexSet> classes;

  Estimator(int n_, int m_, int ell_, int r_, int size_,
            const EstimateOptions& o)
      : n(n_), m(m_), ell(ell_), r(r_), size(size_), opts(o),
        budget(o.limits), rng(o.rng_seed), classes(equal_classes(r_, size_)) {}

  int order() const { return r * size; }

  TransversalOptions solver_opts() const {
    // Each solve gets its own slice so one hard instance cannot eat the
    // estimator's whole budget silently.
    return {SearchLimits::nodes(2'000'000), 1};
  }

  bool has_transversal(const UGraph& g) {
    PartitionedGraph pg{g, classes};
    auto res = find_transversal(pg, {m, ell}, solver_opts());
    budget_nodes += res.nodes;
    if (res.status == TransversalStatus::kBudget)
      throw BudgetExceeded("transversal check exceeded its slice");
    return res.status == TransversalStatus::kFound;
  }

  // Number of m-subsets of classes that still admit a transversal.
  int score(const UGraph& g) {
    PartitionedGraph pg{g, classes};
    SubsetSolver solver(pg, ell, budget);
    std::vector<int> picked;
    int s = 0;
    for (const auto& sub : class_subsets(r, m)) {
      auto out = solver.solve(sub, picked);
      if (out == SubsetSolver::Outcome::kBudget)
        throw BudgetExceeded("estimator budget exhausted");
      if (out == SubsetSolver::Outcome::kFound) ++s;
    }
    return s;
  }

  UGraph random_maximal(UGraph g) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < order(); ++u)
      for (int v = u + 1; v < order(); ++v)
        if (!g.adjacent(u, v)) pairs.emplace_back(u, v);
    for (std::size_t i = pairs.size(); i > 1; --i)
      std::swap(pairs[i - 1], pairs[rng() % i]);
    for (auto [u, v] : pairs)
      if (!edge_creates_clique(g, u, v, n)) g.add_edge(u, v);
    return g;
  }

  // Layered blowup of a random digraph on r vertices without a transitive
  // n-tuple, with the layers as classes.
  UGraph random_layered() {
    BitDigraph d(r);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (i != j) arcs.emplace_back(i, j);
    for (std::size_t i = arcs.size(); i > 1; --i)
      std::swap(arcs[i - 1], arcs[rng() % i]);
    for (auto [i, j] : arcs) {
      d.add_arc(i, j);
      if (has_transitive_set(d, n)) d.remove_arc(i, j);
    }
    return layered_from_digraph(d, size).graph;
  }

  uint64_t budget_nodes = 0;
};

}  // namespace

NEstimate estimate_N(int n, int m, int ell, int class_size,
                     const EstimateOptions& opts) {
  if (n < 2 || m < 1 || ell < 1 || class_size < 1)
    throw std::invalid_argument("need n >= 2 and m, ell, N >= 1");
  NEstimate est;
  est.n = n;
  est.m = m;
  est.ell = ell;
  est.class_size = class_size;
  est.strategy = opts.strategy;
  int r = opts.r;
  if (r <= 0) {
    DrResult dr = search_dr(n, m);
    if (!dr.exact)
      throw std::invalid_argument("dr(n,m) is not known exactly; pass r");
    r = dr.lower;
  }
  est.r = r;
  if (r * class_size > UGraph::kDenseLimit)
    throw CapExceeded("estimate instance too large");

  Estimator e(n, m, ell, r, class_size, opts);
  auto accept = [&](const UGraph& g) {
    PartitionedGraph pg{g, e.classes};
    est.best_counterexample = pg;
    est.implied_greater = true;
  };

  try {
    switch (opts.strategy) {
      case EstimateStrategy::kRandom: {
        for (int s = 0; s < opts.samples && e.budget.tick(); ++s) {
          UGraph g = (s % 2 == 0) ? e.random_layered() : UGraph(e.order());
          g = e.random_maximal(std::move(g));
          ++est.candidates_examined;
          if (!e.has_transversal(g)) {
            accept(g);
            break;
          }
        }
        break;
      }
      case EstimateStrategy::kLocalSearch: {
        const int v = e.order();
        for (int s = 0; s < opts.samples && !est.implied_greater; ++s) {
          UGraph g = e.random_maximal(UGraph(v));
          int cur = e.score(g);
          ++est.candidates_examined;
          for (int step = 0; step < opts.steps && cur > 0; ++step) {
            if (!e.budget.tick()) throw BudgetExceeded("estimator budget");
            int a = static_cast<int>(e.rng() % v);
            int b = static_cast<int>(e.rng() % v);
            if (a == b) continue;
            bool had = g.adjacent(a, b);
            if (had) {
              g.remove_edge(a, b);
            } else {
              if (edge_creates_clique(g, a, b, n)) continue;
              g.add_edge(a, b);
            }
            int next = e.score(g);
            ++est.candidates_examined;
            if (next <= cur) {
              cur = next;
            } else if (had) {
              g.add_edge(a, b);
            } else {
              g.remove_edge(a, b);
            }
          }
          if (cur == 0) accept(g);
        }
        break;
      }
      case EstimateStrategy::kExhaustive: {
        // Decide each vertex pair in turn (edge first). `hi` keeps every
        // undecided pair as an edge; since adding edges only destroys
        // transversals, a transversal in `hi` prunes the whole subtree.
        const int v = e.order();
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < v; ++a)
          for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
        UGraph lo(v), hi = UGraph::complete(v);
        std::optional<UGraph> found;
        bool aborted = false;
        auto rec = [&](auto& self, std::size_t k) -> bool {
          if (!e.budget.tick()) {
            aborted = true;
            return false;
          }
          if (k == pairs.size()) {
            ++est.candidates_examined;
            if (e.has_transversal(lo)) return false;
            found = lo;
            return true;
          }
          auto [a, b] = pairs[k];
          if (!edge_creates_clique(lo, a, b, n)) {
            lo.add_edge(a, b);
            bool ok = self(self, k + 1);
            lo.remove_edge(a, b);
            if (ok || aborted) return ok;
          }
          hi.remove_edge(a, b);
          bool ok = false;
          if (!e.has_transversal(hi)) ok = self(self, k + 1);
          hi.add_edge(a, b);
          return ok;
        };
        // The all-edges completion is the sparsest-in-transversals graph;
        // if even it has one, no counterexample exists at all.
        if (!e.has_transversal(hi)) rec(rec, 0);
        if (found) accept(*found);
        est.exhausted = !aborted;
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    est.exhausted = false;
  }
  est.nodes = e.budget.nodes() + e.budget_nodes;

  if (est.best_counterexample) {
    const auto& pg = *est.best_counterexample;
    if (has_clique(pg.graph, n) ||
        find_transversal(pg, {m, ell}).status != TransversalStatus::kNone)
      throw std::logic_error("estimate produced an invalid counterexample");
  }
  return est;
}

}  // namespace tlab
