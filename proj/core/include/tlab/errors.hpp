// SPDX-License-Identifier: Apache-2.0

#ifndef TLAB_ERRORS_HPP_
#define TLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace tlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search stopped on its node or time limit before exhausting its space.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A generator would exceed its vertex cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Text input (graph6, digraph6, JSON payloads) could not be parsed.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class CacheCorrupt : public Error {
 public:
  using Error::Error;
};

// The digraph offered as a dr(n,m) counterexample contains a transitive
// n-tuple or an independent m-set; witness() holds it.
class NotACounterexample : public Error {
 public:
  enum class Kind { kTransitive, kIndependent };

  NotACounterexample(Kind kind, std::vector<int> witness)
      : Error(kind == Kind::kTransitive ? "digraph has a transitive set"
                                        : "digraph has an independent set"),
        kind_(kind),
        witness_(std::move(witness)) {}

  Kind kind() const { return kind_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<int> witness_;
};

}  // namespace tlab

#endif  // TLAB_ERRORS_HPP_
