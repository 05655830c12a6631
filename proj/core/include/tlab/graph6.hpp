// SPDX-License-Identifier: Apache-2.0
//
// graph6 and digraph6 text encodings, following the format description
// distributed with nauty (formats.txt).

#ifndef TLAB_GRAPH6_HPP_
#define TLAB_GRAPH6_HPP_

#include <string>
#include <string_view>

#include "tlab/graph.hpp"

namespace tlab {

std::string encode_graph6(const UGraph& g);
// Accepts an optional ">>graph6<<" header and trailing newline.
// Throws MalformedInput.
UGraph decode_graph6(std::string_view line);

std::string encode_digraph6(const BitDigraph& d);
// Throws MalformedInput, including for self-loops and order > 128.
BitDigraph decode_digraph6(std::string_view line);

}  // namespace tlab

#endif  // TLAB_GRAPH6_HPP_
