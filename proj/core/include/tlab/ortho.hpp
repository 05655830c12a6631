// SPDX-License-Identifier: Apache-2.0
//
// Orthogonality graphs over rational vectors and searches for large vector
// families in which every (m+1)-subset contains an orthogonal pair.

#ifndef TLAB_ORTHO_HPP_
#define TLAB_ORTHO_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tlab/budget.hpp"
#include "tlab/graph.hpp"

namespace tlab {

// Nonzero rational direction stored as coprime integers with the first
// nonzero coordinate positive, so parallel vectors compare equal.
// Arithmetic is int64 with overflow checks (std::overflow_error).
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::vector<int64_t> integers);
  // (numerator, denominator) per coordinate; denominators must be nonzero.
  static RatVec from_rationals(
      const std::vector<std::pair<int64_t, int64_t>>& coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<int64_t>& coords() const { return coords_; }
  // Exact dot product of the canonical representatives.
  __int128 dot(const RatVec& o) const;
  bool orthogonal_to(const RatVec& o) const { return dot(o) == 0; }
  std::string to_string() const;

  bool operator==(const RatVec&) const = default;
  auto operator<=>(const RatVec&) const = default;

 private:
  std::vector<int64_t> coords_;
};

// Vectors of one dimension with no two parallel, in insertion order.
class VectorFamily {
 public:
  explicit VectorFamily(int dim = 0) : dim_(dim) {}

  // Returns false (and changes nothing) if a parallel vector is present.
  bool add(const RatVec& v);
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  const std::vector<RatVec>& vectors() const { return vectors_; }
  const RatVec& operator[](int i) const { return vectors_[i]; }
  VectorFamily subset(const std::vector<int>& idx) const;

 private:
  int dim_;
  std::vector<RatVec> vectors_;
};

// Standard basis e_0..e_{dim-1}.
VectorFamily standard_basis(int dim);
// Every canonical direction with integer coordinates in [-height, height],
// in lexicographic order of the coordinate tuples.
VectorFamily integer_direction_pool(int dim, int height);
// `pairs` disjoint orthogonal pairs in Q^2: (1, i) and (i, -1) for
// i < pairs. Vectors from different pairs are never orthogonal, so the
// orthogonality graph is a perfect matching.
VectorFamily orthogonal_pairs_q2(int pairs);

// Edge iff the exact dot product is zero.
UGraph ortho_graph(const VectorFamily& f);

// True iff every (m+1)-subset contains an orthogonal pair, i.e. the
// orthogonality graph has independence number <= m.
bool alpha_check(const VectorFamily& f, int m,
                 const IndependenceOptions& opts = {});

struct AlphaSearchResult {
  VectorFamily family;
  std::vector<int> indices;  // into the pool
  bool exact = false;        // the pool was searched exhaustively
  uint64_t nodes = 0;
};

// Largest subfamily of the pool whose orthogonality graph has independence
// number <= m, by branch and bound. Candidates are bounded by a greedy
// proper colouring of their orthogonality graph: a colour class is
// pairwise non-orthogonal, so it contributes at most m vectors.
AlphaSearchResult alpha_lower_search(
    int n, int m, const VectorFamily& pool,
    SearchLimits limits = SearchLimits::nodes(100'000'000));

// Translations between alpha(n,m) and the Ramsey-type quantities:
// alpha(n,m) = r_hat(n,m+1) - 1 = r_star(m+1) - 1 and
// r(G,k) = r_star(k-1) + 1, so r(G, m+2) = alpha(n,m) + 2.
struct RStarRelation {
  int m = 0;
  int alpha = 0;
  int r_star_m_plus_1 = 0;
  int r_hat_m_plus_1 = 0;
  int r_m_plus_2 = 0;
};
RStarRelation rstar_relation(int m, int alpha_value);

}  // namespace tlab

#endif  // TLAB_ORTHO_HPP_
