// SPDX-License-Identifier: Apache-2.0

#include "tlab/graph6.hpp"

#include <cstdint>
#include <vector>

#include "tlab/errors.hpp"

namespace tlab {
namespace {

void append_size(std::string& out, uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      v <<= 1;
      if (i + j < bits.size() && bits[i + j]) v |= 1;
    }
    out.push_back(static_cast<char>(v + 63));
  }
}

std::string_view strip(std::string_view line, std::string_view header) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  return line;
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) throw MalformedInput("byte outside graph6 range");
  return v - 63;
}

uint64_t read_size(std::string_view& s) {
  if (s.empty()) throw MalformedInput("missing size field");
  if (s[0] != 126) {
    uint64_t n = static_cast<uint64_t>(sextet(s[0]));
    s.remove_prefix(1);
    return n;
  }
  std::size_t width = (s.size() >= 2 && s[1] == 126) ? 6 : 3;
  std::size_t skip = width == 6 ? 2 : 1;
  if (s.size() < skip + width) throw MalformedInput("truncated size field");
  uint64_t n = 0;
  for (std::size_t i = 0; i < width; ++i)
    n = (n << 6) | static_cast<uint64_t>(sextet(s[skip + i]));
  s.remove_prefix(skip + width);
  return n;
}

std::vector<bool> read_bits(std::string_view s, uint64_t count) {
  uint64_t need = (count + 5) / 6;
  if (s.size() != need)
    throw MalformedInput("body length " + std::to_string(s.size()) +
                         ", expected " + std::to_string(need));
  std::vector<bool> bits;
  bits.reserve(need * 6);
  for (char c : s) {
    int v = sextet(c);
    for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
  }
  for (uint64_t i = count; i < bits.size(); ++i)
    if (bits[i]) throw MalformedInput("nonzero padding bits");
  bits.resize(count);
  return bits;
}

}  // namespace

std::string encode_graph6(const UGraph& g) {
  const uint64_t n = static_cast<uint64_t>(g.order());
  std::string out;
  append_size(out, n);
  std::vector<bool> bits;
  bits.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
  append_bits(out, bits);
  return out;
}

UGraph decode_graph6(std::string_view line) {
  std::string_view s = strip(line, ">>graph6<<");
  if (!s.empty() && s[0] == '&')
    throw MalformedInput("digraph6 line given where graph6 expected");
  uint64_t n = read_size(s);
  if (n > static_cast<uint64_t>(UGraph::kMaxOrder))
    throw MalformedInput("graph order exceeds supported maximum");
  auto bits = read_bits(s, n * (n == 0 ? 0 : n - 1) / 2);
  UGraph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (bits[k++]) g.add_edge(i, j);
  return g;
}

std::string encode_digraph6(const BitDigraph& d) {
  const uint64_t n = static_cast<uint64_t>(d.order());
  std::string out = "&";
  append_size(out, n);
  std::vector<bool> bits;
  bits.reserve(n * n);
  for (int i = 0; i < d.order(); ++i)
    for (int j = 0; j < d.order(); ++j) bits.push_back(d.has_arc(i, j));
  append_bits(out, bits);
  return out;
}

BitDigraph decode_digraph6(std::string_view line) {
  std::string_view s = strip(line, ">>digraph6<<");
  if (s.empty() || s[0] != '&') throw MalformedInput("missing '&' prefix");
  s.remove_prefix(1);
  uint64_t n = read_size(s);
  if (n > static_cast<uint64_t>(BitDigraph::kMaxOrder))
    throw MalformedInput("digraph order exceeds 128");
  auto bits = read_bits(s, n * n);
  BitDigraph d(static_cast<int>(n));
  for (uint64_t i = 0; i < n; ++i)
    for (uint64_t j = 0; j < n; ++j) {
      if (!bits[i * n + j]) continue;
      if (i == j) throw MalformedInput("self-loop in digraph6 input");
      d.add_arc(static_cast<int>(i), static_cast<int>(j));
    }
  return d;
}

}  // namespace tlab
