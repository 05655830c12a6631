// SPDX-License-Identifier: Apache-2.0
//
// Canonical labelling of digraphs by equitable partition refinement and a
// backtracking search over individualisations, pruned with the
// automorphisms discovered along the way.

#ifndef TLAB_CANON_HPP_
#define TLAB_CANON_HPP_

#include <span>
#include <string>
#include <vector>

#include "tlab/graph.hpp"

namespace tlab {

struct CanonicalForm {
  // labelling[v] is the canonical position of vertex v.
  std::vector<int> labelling;
  BitDigraph graph;
  // Compact byte string; equal iff the (coloured) digraphs are isomorphic.
  std::string certificate;
  // orbits[v] is the least vertex in v's orbit under the (colour-preserving)
  // automorphism group generated by the automorphisms found while searching.
  std::vector<int> orbits;
  uint64_t leaves = 0;
};

// `colours` (optional, one entry per vertex) restricts the labelling to
// colour-preserving isomorphisms; smaller colours get smaller labels.
CanonicalForm canonical_form(const BitDigraph& d,
                             std::span<const int> colours = {});

// digraph6 line of the canonical relabelling.
std::string canonical_label(const BitDigraph& d);

bool isomorphic(const BitDigraph& a, const BitDigraph& b);

// True iff some colour-preserving automorphism maps u to v.
bool same_orbit(const BitDigraph& d, int u, int v,
                std::span<const int> colours = {});

}  // namespace tlab

#endif  // TLAB_CANON_HPP_
