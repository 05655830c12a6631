// SPDX-License-Identifier: Apache-2.0

#include "tlab/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "tlab/canon.hpp"
#include "tlab/errors.hpp"

namespace tlab {

DrCertificate check_counterexample(const BitDigraph& d, int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be >= 1");
  if (auto t = find_transitive_tuple(d, n))
    throw NotACounterexample(NotACounterexample::Kind::kTransitive, *t);
  if (auto s = find_digraph_independent(d, m))
    throw NotACounterexample(NotACounterexample::Kind::kIndependent, *s);
  return {n, m, d, true, true};
}

const char* to_string(ProofMethod method) {
  switch (method) {
    case ProofMethod::kExhaustive: return "exhaustive";
    case ProofMethod::kBoundTable: return "bound-table";
    case ProofMethod::kRecurrence: return "recurrence";
  }
  return "unknown";
}

// ---- classical Ramsey numbers ----

std::vector<int> RamseyTable::normalise(std::vector<int> sizes) {
  std::sort(sizes.begin(), sizes.end());
  if (!sizes.empty() && sizes.front() <= 1) return {1};
  // A colour asking for a 2-set is satisfied by any single pair of that
  // colour, so it only matters when it is the only colour left.
  std::vector<int> rest;
  for (int s : sizes)
    if (s != 2) rest.push_back(s);
  if (rest.empty()) return {2};
  return rest;
}

RamseyTable RamseyTable::with_literature() {
  RamseyTable t;
  t.set({3, 3}, {6, 6, false});
  t.set({3, 4}, {9, 9, false});
  t.set({3, 3, 3}, {17, 17, false});
  return t;
}

std::optional<RamseyTable::Entry> RamseyTable::lookup(
    std::vector<int> sizes) const {
  auto key = normalise(std::move(sizes));
  if (key.size() == 1) return Entry{key[0], key[0], true};
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void RamseyTable::set(std::vector<int> sizes, Entry entry) {
  entries_[normalise(std::move(sizes))] = entry;
}

bool RamseyTable::verify_locally(std::vector<int> sizes) {
  auto key = normalise(std::move(sizes));
  auto it = entries_.find(key);
  if (it == entries_.end() || key.size() != 2) return false;
  Entry& e = it->second;
  if (e.lower != e.upper) return false;
  int r = e.lower;
  if (r * (r - 1) / 2 > 21) return false;
  bool ok = !classical_ramsey_holds(key[0], key[1], r - 1) &&
            classical_ramsey_holds(key[0], key[1], r);
  if (ok) e.verified = true;
  return ok;
}

namespace {

bool has_mono_clique(const std::vector<uint32_t>& colour_adj, int r,
                     int size) {
  std::function<bool(uint32_t, int)> rec = [&](uint32_t cand, int need) {
    if (need == 0) return true;
    while (std::popcount(cand) >= need) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      if (rec(cand & colour_adj[v], need - 1)) return true;
    }
    return false;
  };
  return rec(r >= 32 ? ~0U : ((1U << r) - 1), size);
}

}  // namespace

bool classical_ramsey_holds(int s, int t, int r) {
  if (r < 0 || r > 31) throw std::invalid_argument("r out of range");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v) pairs.emplace_back(u, v);
  if (pairs.size() > 30) throw std::invalid_argument("too many colourings");
  const uint64_t total = uint64_t{1} << pairs.size();
  std::vector<uint32_t> red(r), blue(r);
  for (uint64_t mask = 0; mask < total; ++mask) {
    std::fill(red.begin(), red.end(), 0);
    std::fill(blue.begin(), blue.end(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [u, v] = pairs[i];
      auto& c = ((mask >> i) & 1) ? red : blue;
      c[u] |= 1U << v;
      c[v] |= 1U << u;
    }
    if (!has_mono_clique(red, r, s) && !has_mono_clique(blue, r, t))
      return false;
  }
  return true;
}

// ---- bounds ----

namespace {

// Smallest integer x with x*x >= 2^e.
int ceil_sqrt_pow2(int e) {
  if (e % 2 == 0) return e / 2 >= 31 ? std::numeric_limits<int>::max()
                                      : 1 << (e / 2);
  long double v = std::ceil(std::sqrt(std::pow(2.0L, e)));
  while ((v - 1) * (v - 1) >= std::pow(2.0L, e)) v -= 1;
  return v > std::numeric_limits<int>::max() ? std::numeric_limits<int>::max()
                                             : static_cast<int>(v);
}

int sat_add(long long v) {
  return v > std::numeric_limits<int>::max() ? std::numeric_limits<int>::max()
                                             : static_cast<int>(v);
}

class BoundSolver {
 public:
  BoundSolver(const RamseyTable& table, const DrKnown& known)
      : table_(table), known_(known) {}

  DrInterval solve(int n, int m) {
    auto key = std::make_pair(n, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    DrInterval iv;
    if (n == 1 || m == 1) {
      iv = {1, 1, "base case", "base case"};
    } else if (auto k = known_.find(key); k != known_.end()) {
      iv = {k->second, k->second, "known value", "known value"};
    } else {
      iv = derive(n, m);
    }
    memo_[key] = iv;
    return iv;
  }

 private:
  DrInterval derive(int n, int m) {
    DrInterval iv;
    auto lower = [&](int v, const std::string& why) {
      if (v > iv.lower) {
        iv.lower = v;
        iv.lower_source = why;
      }
    };
    auto upper = [&](int v, const std::string& why) {
      if (v < iv.upper) {
        iv.upper = v;
        iv.upper_source = why;
      }
    };
    DrInterval a = solve(n - 1, m);
    DrInterval b = solve(n, m - 1);
    iv.upper = sat_add(2LL * a.upper + b.upper - 1);
    iv.upper_source = "recurrence";
    iv.lower = std::max(n, m);
    iv.lower_source = "trivial";
    lower(a.lower, "monotone in n");
    lower(b.lower, "monotone in m");
    if (auto r = table_.lookup({n, m})) lower(r->lower, "R(n,m)");
    if (auto r = table_.lookup({n, n, m})) upper(r->upper, "R(n,n,m)");
    if (m == 2) {
      lower(ceil_sqrt_pow2(n - 1), "2^((n-1)/2)");
      if (n - 1 < 31) upper(1 << (n - 1), "2^(n-1)");
    }
    if (iv.lower > iv.upper)
      throw std::logic_error("inconsistent dr bounds");
    return iv;
  }

  const RamseyTable& table_;
  const DrKnown& known_;
  std::map<std::pair<int, int>, DrInterval> memo_;
};

}  // namespace

DrInterval dr_bounds(int n, int m, const RamseyTable& table,
                     const DrKnown& known) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be >= 1");
  BoundSolver solver(table, known);
  return solver.solve(n, m);
}

// ---- canonical augmentation ----

namespace {

// Is there a transitive n-tuple through the new vertex, given its current
// out-set `out_new` (new -> x) and in-set `in_new` (x -> new)? Members
// placed before the new vertex must lie in in_new, later ones in out_new.
bool transitive_through_new(const BitDigraph& d, Mask128 cand, Mask128 out_new,
                            Mask128 in_new, int need, bool placed) {
  if (need == 0) return placed;
  if (cand.count() + (placed ? 0 : 1) < need) return false;
  if (!placed) {
    if (transitive_through_new(d, cand & out_new, out_new, in_new, need - 1,
                               true))
      return true;
    Mask128 order = cand & in_new;
    while (order.any()) {
      int x = order.pop_first();
      if (transitive_through_new(d, cand.without(Mask128::single(x)) & d.out(x),
                                 out_new, in_new, need - 1, false))
        return true;
    }
    return false;
  }
  Mask128 order = cand;
  while (order.any()) {
    int x = order.pop_first();
    if (transitive_through_new(d, cand.without(Mask128::single(x)) & d.out(x),
                               out_new, in_new, need - 1, true))
      return true;
  }
  return false;
}

struct Invariant {
  int key[4];
  auto operator<=>(const Invariant&) const = default;
};

class Augmenter {
 public:
  Augmenter(int n, int m) : n_(n), m_(m) {}

  // Calls `emit` with every accepted child of `parent`, deduplicated.
  template <typename Emit>
  void children(const BitDigraph& parent, Emit&& emit) const {
    std::unordered_set<std::string> seen;
    const int k = parent.order();
    auto on_child = [&](Mask128 out_new, Mask128 in_new) {
      BitDigraph child = parent.with_vertex(out_new, in_new);
      std::string cert;
      if (!accept(child, cert)) return;
      if (seen.insert(cert).second) emit(child, cert);
    };
    assign(parent, 0, k, Mask128{}, Mask128{}, Mask128{}, on_child);
  }

  // Canonical deletion: the new (last) vertex must be equivalent to the
  // canonically last vertex among those of maximal invariant.
  bool accept(const BitDigraph& child, std::string& cert) const {
    const int k = child.order();
    const int v = k - 1;
    std::vector<Invariant> inv(k);
    for (int x = 0; x < k; ++x) {
      int nb = 0;
      child.adjacent(x).for_each([&](int y) { nb += child.adjacent(y).count(); });
      inv[x] = {{child.adjacent(x).count(), child.out(x).count(),
                 child.in(x).count(), nb}};
    }
    Invariant top = *std::max_element(inv.begin(), inv.end());
    if (inv[v] < top) return false;
    std::vector<Invariant> distinct = inv;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    std::vector<int> colours(k);
    for (int x = 0; x < k; ++x)
      colours[x] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), inv[x]) -
          distinct.begin());
    CanonicalForm form = canonical_form(child, colours);
    cert = std::move(form.certificate);
    int last = static_cast<int>(
        std::find(form.labelling.begin(), form.labelling.end(), k - 1) -
        form.labelling.begin());
    return form.orbits[v] == form.orbits[last];
  }

 private:
  template <typename OnChild>
  void assign(const BitDigraph& parent, int u, int k, Mask128 out_new,
              Mask128 in_new, Mask128 none, OnChild& on_child) const {
    if (u == k) {
      on_child(out_new, in_new);
      return;
    }
    const Mask128 bit = Mask128::single(u);
    // State order: none, forward (u -> new), backward (new -> u), both.
    {
      Mask128 none2 = none | bit;
      bool bad = false;
      if (m_ <= 2) {
        bad = true;
      } else {
        Mask128 cand = none.without(parent.adjacent(u));
        bad = find_digraph_independent_in(parent, cand, m_ - 2).has_value();
      }
      if (!bad) assign(parent, u + 1, k, out_new, in_new, none2, on_child);
    }
    const Mask128 prior = Mask128::first_n(u + 1);
    for (int state = 1; state <= 3; ++state) {
      Mask128 o = out_new, i = in_new;
      if (state & 1) i |= bit;
      if (state & 2) o |= bit;
      if (creates_transitive(parent, u, state, out_new, in_new, o, i, prior))
        continue;
      assign(parent, u + 1, k, o, i, none, on_child);
    }
  }

  // Does giving u `state` against the new vertex create a transitive
  // n-tuple? Only tuples through both u and the new vertex can be new.
  bool creates_transitive(const BitDigraph& parent, int u, int state,
                          Mask128 out_old, Mask128 in_old, Mask128 out_new,
                          Mask128 in_new, Mask128 prior) const {
    if (n_ <= 2) return true;
    if (n_ == 3) {
      // Shapes (new,a,b), (a,new,b), (a,b,new) with a -> b.
      if ((state & 1) && ((in_old & parent.adjacent(u)).any() ||
                          (parent.out(u) & out_old).any()))
        return true;
      if ((state & 2) && ((out_old & parent.adjacent(u)).any() ||
                          (parent.in(u) & in_old).any()))
        return true;
      return false;
    }
    return transitive_through_new(parent, prior, out_new, in_new, n_, false);
  }

  int n_;
  int m_;
};

struct SharedResult {
  std::mutex mu;
  std::vector<uint64_t> counts;
  int max_order = 0;
  std::optional<BitDigraph> best;
  std::string best_key;

  // `key` is any isomorphism-invariant certificate of d.
  void record(const BitDigraph& d, const std::string& key) {
    std::lock_guard lock(mu);
    const int k = d.order();
    if (static_cast<int>(counts.size()) <= k) counts.resize(k + 1, 0);
    ++counts[k];
    if (k > max_order || (k == max_order && key < best_key)) {
      max_order = k;
      best = d;
      best_key = key;
    }
  }
};

}  // namespace

EnumerationReport enumerate_counterexamples(
    int n, int m, int max_order, Budget& budget, int threads,
    const std::function<void(const BitDigraph&)>& visit) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be >= 1");
  max_order = std::min(max_order, BitDigraph::kMaxOrder);
  EnumerationReport report;
  SharedResult shared;
  shared.counts.assign(1, 1);  // the empty digraph
  // A single vertex is already a transitive 1-set / independent 1-set.
  if (n == 1 || m == 1 || max_order < 1) {
    report.complete = true;
    report.classes_per_order = shared.counts;
    return report;
  }
  Augmenter aug(n, m);
  std::atomic<bool> stopped{false};

  using Node = std::pair<BitDigraph, std::string>;
  std::function<void(const BitDigraph&, const std::string&)> dfs =
      [&](const BitDigraph& d, const std::string& key) {
        if (stopped.load(std::memory_order_relaxed)) return;
        if (!budget.tick()) {
          stopped = true;
          return;
        }
        shared.record(d, key);
        if (visit) visit(d);
        if (d.order() >= max_order) return;
        aug.children(d, [&](const BitDigraph& c, const std::string& k) {
          dfs(c, k);
        });
      };

  Node root{BitDigraph(1), std::string()};
  if (threads <= 1) {
    dfs(root.first, root.second);
  } else {
    // Expand breadth-first until there is enough independent work, then
    // hand whole subtrees to workers.
    std::vector<Node> frontier{root};
    const std::size_t want = static_cast<std::size_t>(threads) * 16;
    while (!frontier.empty() && frontier.size() < want &&
           frontier.front().first.order() < max_order && !stopped) {
      std::vector<Node> next;
      for (const auto& [d, key] : frontier) {
        if (!budget.tick()) {
          stopped = true;
          break;
        }
        shared.record(d, key);
        if (visit) visit(d);
        aug.children(d, [&](const BitDigraph& c, const std::string& k) {
          next.emplace_back(c, k);
        });
      }
      frontier = std::move(next);
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= frontier.size()) return;
          dfs(frontier[i].first, frontier[i].second);
        }
      });
    for (auto& th : pool) th.join();
  }

  report.nodes = budget.nodes();
  report.complete = !stopped.load();
  report.max_order_found = shared.max_order;
  report.classes_per_order = shared.counts;
  report.best = shared.best;
  return report;
}

std::optional<BitDigraph> find_circulant_counterexample(int n, int m,
                                                        int order) {
  if (order < 1 || order > 24) return std::nullopt;
  const uint32_t sets = 1U << (order - 1);
  for (uint32_t s = 0; s < sets; ++s) {
    BitDigraph d(order);
    for (int diff = 1; diff < order; ++diff)
      if ((s >> (diff - 1)) & 1U)
        for (int i = 0; i < order; ++i) d.add_arc(i, (i + diff) % order);
    if (has_transitive_set(d, n) || digraph_independent(d, m)) continue;
    return d;
  }
  return std::nullopt;
}

namespace {

// Circulant probes cost 2^(order-1) checks; beyond this they stop paying.
constexpr int kCirculantProbeMaxOrder = 18;

// Ordered tuples v_1..v_k with v_i -> v_j for i < j, drawn from cand.
uint64_t count_transitive(const BitDigraph& d, Mask128 cand, int k) {
  if (k == 0) return 1;
  uint64_t total = 0;
  cand.for_each([&](int x) {
    total += count_transitive(d, cand.without(Mask128::single(x)) & d.out(x),
                              k - 1);
  });
  return total;
}

uint64_t count_independent(const BitDigraph& d, Mask128 cand, int k) {
  if (k == 0) return 1;
  if (cand.count() < k) return 0;
  uint64_t total = 0;
  cand.for_each([&](int x) {
    total += count_independent(d, cand.above(x) & ~d.adjacent(x), k - 1);
  });
  return total;
}

uint64_t anneal_cost(const BitDigraph& d, int n, int m) {
  return count_transitive(d, d.vertices(), n) +
         count_independent(d, d.vertices(), m);
}

}  // namespace

std::optional<BitDigraph> anneal_counterexample(int n, int m, int order,
                                                const AnnealOptions& opts,
                                                Budget* budget) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be >= 1");
  if (order < 0 || order > BitDigraph::kMaxOrder)
    throw std::invalid_argument("order out of range");
  if (order < 2) {
    BitDigraph d(order);
    if (!has_transitive_set(d, n) && !digraph_independent(d, m)) return d;
    return std::nullopt;
  }
  std::mt19937_64 rng(opts.seed ^ (uint64_t(n) << 48) ^ (uint64_t(m) << 32) ^
                      uint64_t(order));
  auto unit = [&] { return double(rng() >> 11) * 0x1.0p-53; };
  auto set_state = [](BitDigraph& d, int i, int j, int state) {
    d.remove_arc(i, j);
    d.remove_arc(j, i);
    if (state & 1) d.add_arc(i, j);
    if (state & 2) d.add_arc(j, i);
  };
  for (int restart = 0; restart < opts.restarts; ++restart) {
    BitDigraph d(order);
    for (int i = 0; i < order; ++i)
      for (int j = i + 1; j < order; ++j)
        set_state(d, i, j, static_cast<int>(rng() % 3));
    uint64_t cost = anneal_cost(d, n, m);
    double temp = 2.0;
    for (int it = 0; it < opts.iterations && cost > 0; ++it) {
      if (budget && !budget->tick()) return std::nullopt;
      int i = static_cast<int>(rng() % order);
      int j = static_cast<int>(rng() % order);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      const int old = (d.has_arc(i, j) ? 1 : 0) | (d.has_arc(j, i) ? 2 : 0);
      const int state = static_cast<int>(rng() % 4);
      if (state == old) continue;
      set_state(d, i, j, state);
      const uint64_t next = anneal_cost(d, n, m);
      if (next <= cost ||
          std::exp((double(cost) - double(next)) / temp) > unit())
        cost = next;
      else
        set_state(d, i, j, old);
      temp = std::max(0.05, temp * 0.99997);
    }
    if (cost == 0) return d;
  }
  return std::nullopt;
}

DrResult search_dr(int n, int m, const DrSearchOptions& opts) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be >= 1");
  DrResult result;
  result.n = n;
  result.m = m;
  const RamseyTable table = RamseyTable::with_literature();
  const DrInterval bounds = dr_bounds(n, m, table);
  result.lower = 1;
  result.upper = bounds.upper;

  if (n == 1 || m == 1) {
    result.lower = result.upper = 1;
    result.exact = true;
    result.proof_method = ProofMethod::kBoundTable;
    result.classes_per_order = {1};
    return result;
  }

  Budget budget(opts.limits);
  const int cap = std::min({opts.max_order, bounds.upper, BitDigraph::kMaxOrder});

  std::optional<BitDigraph> best;
  auto offer = [&](const BitDigraph& d) {
    if (!best || d.order() > best->order()) best = d;
  };
  // The empty digraph on m-1 vertices is always a counterexample.
  if (m - 1 <= BitDigraph::kMaxOrder) offer(BitDigraph::empty(m - 1));

  if (opts.probe_circulants) {
    for (int k = std::min({cap, bounds.upper - 1, kCirculantProbeMaxOrder});
         k >= 2; --k) {
      if (auto d = find_circulant_counterexample(n, m, k)) {
        offer(*d);
        break;
      }
    }
  }
  if (opts.probe_anneal) {
    for (int k = best->order() + 1; k <= std::min(cap, bounds.upper - 1); ++k) {
      auto d = anneal_counterexample(n, m, k, opts.anneal, &budget);
      if (!d) break;
      offer(*d);
    }
  }

  EnumerationReport en =
      enumerate_counterexamples(n, m, cap, budget, opts.threads);
  result.nodes = en.nodes;
  result.classes_per_order = en.classes_per_order;
  if (en.best) offer(*en.best);

  const bool proved = en.complete && en.max_order_found < cap;
  result.budget_exhausted = !en.complete;
  // A depth-first run that stopped early has no fully enumerated order.
  result.exhausted_through = en.complete ? cap : 0;

  // Lower bounds come from certificates only, never from the table.
  result.certificate = check_counterexample(*best, n, m);
  result.lower = best->order() + 1;
  if (proved) {
    result.upper = en.max_order_found + 1;
    result.exact = true;
    result.proof_method = ProofMethod::kExhaustive;
  } else if (result.lower == result.upper) {
    result.exact = true;
    result.proof_method = bounds.upper_source == "recurrence"
                              ? ProofMethod::kRecurrence
                              : ProofMethod::kBoundTable;
  }
  if (result.lower > result.upper)
    throw std::logic_error("dr search produced an empty interval");
  return result;
}

}  // namespace tlab
