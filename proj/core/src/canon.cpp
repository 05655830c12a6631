// SPDX-License-Identifier: Apache-2.0

#include "tlab/canon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tlab/graph6.hpp"

namespace tlab {
namespace {

using Cells = std::vector<std::vector<int>>;
using Certificate = std::vector<Mask128>;

// Splits cells by (out-degree, in-degree) into each splitter cell until the
// partition is equitable. Fragments replace their parent in key order, so
// the result depends only on the isomorphism type of (d, cells).
void refine(const BitDigraph& d, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      Mask128 splitter;
      for (int v : cells[s]) splitter.set(v);
      Cells next;
      next.reserve(cells.size() + 4);
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          int key = (d.out(v) & splitter).count() * 256 +
                    (d.in(v) & splitter).count();
          keyed.emplace_back(key, v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) {
                           return a.first < b.first;
                         });
        if (keyed.front().first == keyed.back().first) {
          next.push_back(std::move(cell));
          continue;
        }
        changed = true;
        std::vector<int> frag;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i > 0 && keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(frag));
            frag.clear();
          }
          frag.push_back(keyed[i].second);
        }
        next.push_back(std::move(frag));
      }
      cells = std::move(next);
    }
  }
}

class CanonSearch {
 public:
  explicit CanonSearch(const BitDigraph& d) : d_(d), n_(d.order()) {}

  void run(Cells cells) { explore(std::move(cells), 0); }

  const std::vector<int>& best_labelling() const { return best_lab_; }
  const Certificate& best_certificate() const { return best_cert_; }
  uint64_t leaves() const { return leaves_; }

  std::vector<int> orbits() {
    path_.clear();
    return stabiliser_orbits(0);
  }

 private:
  Certificate certificate_of(const std::vector<int>& lab) const {
    Certificate cert(n_);
    for (int v = 0; v < n_; ++v) {
      Mask128 row;
      d_.out(v).for_each([&](int w) { row.set(lab[w]); });
      cert[lab[v]] = row;
    }
    return cert;
  }

  // Permutation g with g(v) = the vertex that `to` places where `from`
  // places v; an automorphism when both leaves have equal certificates.
  std::vector<int> automorphism(const std::vector<int>& from,
                                const std::vector<int>& to) const {
    std::vector<int> to_inv(n_);
    for (int v = 0; v < n_; ++v) to_inv[to[v]] = v;
    std::vector<int> g(n_);
    for (int v = 0; v < n_; ++v) g[v] = to_inv[from[v]];
    return g;
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbit representatives of the subgroup generated by stored
  // automorphisms that fix the current path pointwise.
  std::vector<int> stabiliser_orbits(int depth) {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& g : autos_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i)
        fixes = g[path_[i]] == path_[i];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(parent, v), b = find(parent, g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  // Returns the depth to unwind to after an automorphism with the first
  // leaf was found, or -1 to continue normally.
  int explore(Cells cells, int depth) {
    refine(d_, cells);
    if (static_cast<int>(cells.size()) == n_) return leaf(cells);

    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    std::vector<int> members = cells[target];

    std::vector<int> tried;
    for (int v : members) {
      if (!tried.empty()) {
        auto orbit = stabiliser_orbits(depth);
        bool equivalent = std::any_of(tried.begin(), tried.end(), [&](int u) {
          return orbit[u] == orbit[v];
        });
        if (equivalent) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[i])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      path_.push_back(v);
      int jump = explore(std::move(child), depth + 1);
      path_.pop_back();
      tried.push_back(v);
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  int leaf(const Cells& cells) {
    ++leaves_;
    std::vector<int> lab(n_);
    for (int i = 0; i < n_; ++i) lab[cells[i][0]] = i;
    Certificate cert = certificate_of(lab);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = lab;
      first_cert_ = best_cert_ = cert;
      first_path_ = path_;
      return -1;
    }
    if (cert == first_cert_) {
      autos_.push_back(automorphism(lab, first_lab_));
      int common = 0;
      while (common < static_cast<int>(path_.size()) &&
             path_[common] == first_path_[common])
        ++common;
      return common;
    }
    if (cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = std::move(lab);
    } else if (cert == best_cert_) {
      autos_.push_back(automorphism(lab, best_lab_));
    }
    return -1;
  }

  const BitDigraph& d_;
  int n_;
  std::vector<int> path_;
  std::vector<int> first_path_;
  std::vector<int> first_lab_, best_lab_;
  Certificate first_cert_, best_cert_;
  std::vector<std::vector<int>> autos_;
  uint64_t leaves_ = 0;
};

Cells initial_cells(int n, std::span<const int> colours) {
  if (colours.empty()) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return n == 0 ? Cells{} : Cells{all};
  }
  if (static_cast<int>(colours.size()) != n)
    throw std::invalid_argument("colour vector size mismatch");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return colours[a] < colours[b]; });
  Cells cells;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || colours[order[i]] != colours[order[i - 1]])
      cells.emplace_back();
    cells.back().push_back(order[i]);
  }
  return cells;
}

std::string encode_certificate(int n, const Certificate& cert,
                               std::span<const int> sorted_colours) {
  std::string out;
  out.reserve(2 + cert.size() * 16 + sorted_colours.size() * 4);
  out.push_back(static_cast<char>(n));
  for (int c : sorted_colours)
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>(c >> (8 * b)));
  for (const auto& row : cert)
    for (int w = 0; w < 2; ++w)
      for (int b = 0; b < 8; ++b)
        out.push_back(static_cast<char>(row.word(w) >> (8 * b)));
  return out;
}

}  // namespace

CanonicalForm canonical_form(const BitDigraph& d,
                             std::span<const int> colours) {
  const int n = d.order();
  CanonicalForm result;
  std::vector<int> sorted_colours(colours.begin(), colours.end());
  std::sort(sorted_colours.begin(), sorted_colours.end());
  if (n == 0) {
    result.graph = d;
    result.certificate = encode_certificate(0, {}, sorted_colours);
    return result;
  }
  CanonSearch search(d);
  search.run(initial_cells(n, colours));
  result.labelling = search.best_labelling();
  result.graph = d.relabel(result.labelling);
  result.certificate =
      encode_certificate(n, search.best_certificate(), sorted_colours);
  result.leaves = search.leaves();
  result.orbits = search.orbits();
  return result;
}

std::string canonical_label(const BitDigraph& d) {
  return encode_digraph6(canonical_form(d).graph);
}

bool isomorphic(const BitDigraph& a, const BitDigraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  return canonical_form(a).certificate == canonical_form(b).certificate;
}

bool same_orbit(const BitDigraph& d, int u, int v,
                std::span<const int> colours) {
  if (u == v) return true;
  const int n = d.order();
  std::vector<int> base(n, 0);
  if (!colours.empty()) base.assign(colours.begin(), colours.end());
  if (base[u] != base[v]) return false;
  int fresh = *std::max_element(base.begin(), base.end()) + 1;
  std::vector<int> cu = base, cv = base;
  cu[u] = fresh;
  cv[v] = fresh;
  return canonical_form(d, cu).certificate == canonical_form(d, cv).certificate;
}

}  // namespace tlab
