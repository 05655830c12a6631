// SPDX-License-Identifier: Apache-2.0

#include "tlab/ortho.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tlab {

namespace {

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("rational coordinate overflow");
  return r;
}

int64_t checked_abs(int64_t a) {
  if (a == INT64_MIN) throw std::overflow_error("rational coordinate overflow");
  return a < 0 ? -a : a;
}

}  // namespace

RatVec::RatVec(std::vector<int64_t> integers) : coords_(std::move(integers)) {
  if (coords_.empty()) throw std::invalid_argument("vector must have dim >= 1");
  int64_t g = 0;
  for (int64_t c : coords_) g = std::gcd(g, checked_abs(c));
  if (g == 0) throw std::invalid_argument("zero vector has no direction");
  int64_t lead = 0;
  for (int64_t c : coords_)
    if (c != 0) {
      lead = c;
      break;
    }
  const int64_t sign = lead < 0 ? -1 : 1;
  for (int64_t& c : coords_) c = c / g * sign;
}

RatVec RatVec::from_rationals(
    const std::vector<std::pair<int64_t, int64_t>>& coords) {
  int64_t l = 1;
  for (auto [num, den] : coords) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    int64_t d = checked_abs(den);
    l = checked_mul(l / std::gcd(l, d), d);
  }
  std::vector<int64_t> ints;
  for (auto [num, den] : coords) {
    int64_t scaled = checked_mul(num, l / checked_abs(den));
    ints.push_back(den < 0 ? -scaled : scaled);
  }
  return RatVec(std::move(ints));
}

__int128 RatVec::dot(const RatVec& o) const {
  if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  __int128 s = 0;
  for (int i = 0; i < dim(); ++i)
    s += static_cast<__int128>(coords_[i]) * o.coords_[i];
  return s;
}

std::string RatVec::to_string() const {
  std::string s = "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

bool VectorFamily::add(const RatVec& v) {
  if (v.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  if (std::find(vectors_.begin(), vectors_.end(), v) != vectors_.end())
    return false;
  vectors_.push_back(v);
  return true;
}

VectorFamily VectorFamily::subset(const std::vector<int>& idx) const {
  VectorFamily out(dim_);
  for (int i : idx) out.add(vectors_.at(i));
  return out;
}

VectorFamily standard_basis(int dim) {
  VectorFamily f(dim);
  for (int i = 0; i < dim; ++i) {
    std::vector<int64_t> c(dim, 0);
    c[i] = 1;
    f.add(RatVec(c));
  }
  return f;
}

VectorFamily integer_direction_pool(int dim, int height) {
  if (dim < 1 || height < 1)
    throw std::invalid_argument("need dim >= 1 and height >= 1");
  VectorFamily f(dim);
  std::vector<int64_t> c(dim, -height);
  while (true) {
    bool zero = std::all_of(c.begin(), c.end(), [](int64_t x) { return x == 0; });
    if (!zero) {
      // Keep only tuples already in canonical form so each direction is
      // listed once at its own lexicographic position.
      RatVec v(c);
      if (v.coords() == c) f.add(v);
    }
    int i = dim - 1;
    while (i >= 0 && c[i] == height) c[i--] = -height;
    if (i < 0) break;
    ++c[i];
  }
  return f;
}

VectorFamily orthogonal_pairs_q2(int pairs) {
  VectorFamily f(2);
  for (int i = 0; i < pairs; ++i) {
    f.add(RatVec({1, i}));
    f.add(RatVec({i, -1}));
  }
  return f;
}

UGraph ortho_graph(const VectorFamily& f) {
  UGraph g(f.size());
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 1; j < f.size(); ++j)
      if (f[i].orthogonal_to(f[j])) g.add_edge(i, j);
  return g;
}

bool alpha_check(const VectorFamily& f, int m, const IndependenceOptions& opts) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (f.size() <= m) return true;
  return independence_number(ortho_graph(f), opts) <= m;
}

namespace {

// Branch and bound over the pool. `ng` is the non-orthogonality relation;
// a family is admissible iff it holds no ng-clique on m+1 vectors.
class AlphaSearch {
 public:
  AlphaSearch(const VectorFamily& pool, int m, Budget& budget)
      : m_(m), budget_(budget) {
    const int p = pool.size();
    ng_.assign(p, DynBitset(p));
    og_.assign(p, DynBitset(p));
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) {
        auto& rel = pool[i].orthogonal_to(pool[j]) ? og_ : ng_;
        rel[i].set(j);
        rel[j].set(i);
      }
  }

  void run() {
    const int p = static_cast<int>(ng_.size());
    DynBitset cand = DynBitset::full(p);
    DynBitset chosen(p);
    std::vector<int> picked;
    rec(cand, chosen, picked);
  }

  std::vector<int> best;
  bool aborted = false;

 private:
  bool has_ng_clique(DynBitset within, int k) const {
    if (k <= 0) return true;
    if (within.count() < k) return false;
    bool found = false;
    within.for_each([&](int v) {
      if (found) return;
      DynBitset next = within & ng_[v];
      for (int u = 0; u <= v; ++u) next.reset(u);
      if (has_ng_clique(std::move(next), k - 1)) found = true;
    });
    return found;
  }

  // Sum over greedy ng-cliques covering cand of min(|clique|, m).
  int colour_bound(DynBitset cand) const {
    int bound = 0;
    while (cand.any()) {
      DynBitset cls = cand;
      int size = 0;
      while (cls.any()) {
        int v = cls.first();
        ++size;
        cand.reset(v);
        cls.reset(v);
        cls &= ng_[v];
      }
      bound += std::min(size, m_);
    }
    return bound;
  }

  void rec(DynBitset& cand, DynBitset& chosen, std::vector<int>& picked) {
    if (picked.size() > best.size()) best = picked;
    if (cand.none()) return;
    if (!budget_.tick()) {
      aborted = true;
      return;
    }
    if (static_cast<int>(picked.size()) + colour_bound(cand) <=
        static_cast<int>(best.size()))
      return;
    const int v = cand.first();
    cand.reset(v);
    if (!has_ng_clique(chosen & ng_[v], m_)) {
      DynBitset next = cand;
      // With m = 1 the family must be pairwise orthogonal.
      if (m_ == 1) next &= og_[v];
      chosen.set(v);
      picked.push_back(v);
      rec(next, chosen, picked);
      picked.pop_back();
      chosen.reset(v);
    }
    if (!aborted) rec(cand, chosen, picked);
    cand.set(v);
  }

  int m_;
  Budget& budget_;
  std::vector<DynBitset> ng_;
  std::vector<DynBitset> og_;
};

}  // namespace

AlphaSearchResult alpha_lower_search(int n, int m, const VectorFamily& pool,
                                     SearchLimits limits) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (pool.dim() != n) throw std::invalid_argument("pool dimension mismatch");
  AlphaSearchResult res;
  res.family = VectorFamily(n);
  if (m >= pool.size()) {
    res.family = pool;
    for (int i = 0; i < pool.size(); ++i) res.indices.push_back(i);
    res.exact = true;
    return res;
  }
  Budget budget(limits);
  AlphaSearch search(pool, m, budget);
  search.run();
  res.indices = search.best;
  res.family = pool.subset(res.indices);
  res.exact = !search.aborted;
  res.nodes = budget.nodes();
  return res;
}

RStarRelation rstar_relation(int m, int alpha_value) {
  if (m < 1 || alpha_value < 0)
    throw std::invalid_argument("need m >= 1 and alpha >= 0");
  RStarRelation r;
  r.m = m;
  r.alpha = alpha_value;
  r.r_star_m_plus_1 = alpha_value + 1;
  r.r_hat_m_plus_1 = alpha_value + 1;
  r.r_m_plus_2 = r.r_star_m_plus_1 + 1;
  return r;
}

}  // namespace tlab
