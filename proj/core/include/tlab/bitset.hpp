// SPDX-License-Identifier: Apache-2.0
//
// Bit-parallel vertex masks: a fixed 128-bit mask for the digraph fast path
// and a growable bitset for undirected graphs of arbitrary order.

#ifndef TLAB_BITSET_HPP_
#define TLAB_BITSET_HPP_

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tlab {

class Mask128 {
 public:
  static constexpr int kBits = 128;

  constexpr Mask128() = default;

  static constexpr Mask128 first_n(int n) {
    Mask128 m;
    if (n >= 64) {
      m.w_[0] = ~uint64_t{0};
      m.w_[1] = n >= 128 ? ~uint64_t{0} : ((uint64_t{1} << (n - 64)) - 1);
    } else if (n > 0) {
      m.w_[0] = (uint64_t{1} << n) - 1;
    }
    return m;
  }
  static constexpr Mask128 single(int v) {
    Mask128 m;
    m.set(v);
    return m;
  }

  constexpr void set(int v) { w_[v >> 6] |= uint64_t{1} << (v & 63); }
  constexpr void reset(int v) { w_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
  constexpr bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }
  constexpr bool any() const { return (w_[0] | w_[1]) != 0; }
  constexpr bool none() const { return !any(); }
  constexpr int count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }
  // Lowest member, or -1 when empty.
  constexpr int first() const {
    if (w_[0] != 0) return std::countr_zero(w_[0]);
    if (w_[1] != 0) return 64 + std::countr_zero(w_[1]);
    return -1;
  }
  constexpr int pop_first() {
    int v = first();
    if (v >= 0) reset(v);
    return v;
  }

  constexpr Mask128 operator&(const Mask128& o) const {
    return {w_[0] & o.w_[0], w_[1] & o.w_[1]};
  }
  constexpr Mask128 operator|(const Mask128& o) const {
    return {w_[0] | o.w_[0], w_[1] | o.w_[1]};
  }
  constexpr Mask128 operator~() const { return {~w_[0], ~w_[1]}; }
  constexpr Mask128& operator&=(const Mask128& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  constexpr Mask128& operator|=(const Mask128& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  constexpr Mask128 without(const Mask128& o) const {
    return {w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]};
  }
  // Members strictly greater than v.
  constexpr Mask128 above(int v) const { return without(first_n(v + 1)); }

  constexpr bool operator==(const Mask128&) const = default;
  constexpr auto operator<=>(const Mask128& o) const {
    if (w_[1] != o.w_[1]) return w_[1] <=> o.w_[1];
    return w_[0] <=> o.w_[0];
  }

  constexpr uint64_t word(int i) const { return w_[i]; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int i = 0; i < 2; ++i) {
      uint64_t w = w_[i];
      while (w != 0) {
        fn(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

 private:
  constexpr Mask128(uint64_t lo, uint64_t hi) : w_{lo, hi} {}
  uint64_t w_[2] = {0, 0};
};

class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static DynBitset full(std::size_t nbits) {
    DynBitset b(nbits);
    for (std::size_t i = 0; i < nbits; ++i) b.set(i);
    return b;
  }

  std::size_t size() const { return nbits_; }

  void set(std::size_t v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  void reset(std::size_t v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
  bool test(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  bool any() const {
    for (uint64_t w : words_)
      if (w != 0) return true;
    return false;
  }
  bool none() const { return !any(); }
  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  DynBitset& operator&=(const DynBitset& o) {
    assert(o.words_.size() == words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    assert(o.words_.size() == words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DynBitset& subtract(const DynBitset& o) {
    assert(o.words_.size() == words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }

  bool intersects(const DynBitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  int count_and(const DynBitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool is_subset_of(const DynBitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const DynBitset&) const = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w != 0) {
        fn(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace tlab

#endif  // TLAB_BITSET_HPP_
