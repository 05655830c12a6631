// SPDX-License-Identifier: Apache-2.0

#ifndef TLAB_BUDGET_HPP_
#define TLAB_BUDGET_HPP_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>

namespace tlab {

struct SearchLimits {
  uint64_t max_nodes = std::numeric_limits<uint64_t>::max();
  // Zero or negative means no wall-clock limit.
  double max_seconds = 0.0;

  static SearchLimits nodes(uint64_t n) { return {n, 0.0}; }
  static SearchLimits unlimited() { return {}; }
};

// Shared node counter plus deadline. tick() is safe to call from several
// worker threads; the clock is only consulted every 4096 nodes.
class Budget {
 public:
  explicit Budget(SearchLimits limits = {})
      : limits_(limits), start_(std::chrono::steady_clock::now()) {}

  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  // Counts one node; returns false once the budget is exhausted.
  bool tick() {
    uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (exhausted_.load(std::memory_order_relaxed)) return false;
    if (n > limits_.max_nodes) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    if (limits_.max_seconds > 0 && (n & 4095) == 0 &&
        elapsed_seconds() > limits_.max_seconds) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  void mark_exhausted() { exhausted_.store(true, std::memory_order_relaxed); }
  uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }
  const SearchLimits& limits() const { return limits_; }

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }
  double remaining_seconds() const {
    if (limits_.max_seconds <= 0) return std::numeric_limits<double>::infinity();
    return limits_.max_seconds - elapsed_seconds();
  }

 private:
  SearchLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace tlab

#endif  // TLAB_BUDGET_HPP_
