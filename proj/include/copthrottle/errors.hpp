#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace copthrottle {

/// Malformed input: bad vertex ids, unparsable files, violated preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would need more work than its budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t limit)
      : std::runtime_error(what + ": requires " + std::to_string(required) +
                           " units of work, budget is " + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

/// A deterministic cop strategy produced no legal move for a reachable state.
class StrategyUndefined : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Work budget shared by all exhaustive operations. One unit is one
/// elementary step: a subset visited, a game state stored, a search node.
struct Budget {
  static constexpr std::uint64_t kDefaultLimit = 100'000'000;

  std::uint64_t limit = kDefaultLimit;

  void require(std::uint64_t needed, const std::string& what) const {
    if (needed > limit) throw BudgetExceeded(what, needed, limit);
  }
};

/// Incremental step counter for searches whose size is not known upfront.
class StepCounter {
 public:
  StepCounter(const Budget& budget, std::string what) : limit_(budget.limit), what_(std::move(what)) {}

  void tick(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) throw BudgetExceeded(what_, used_, limit_);
  }

  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string what_;
};

}  // namespace copthrottle
