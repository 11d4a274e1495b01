#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace ramsey_p5 {

// Search limits. The node limit is checked first so CI runs are reproducible;
// the wall-clock limit is for interactive use. Zero nodes means unlimited.
struct Budget {
  std::uint64_t node_limit = 0;
  std::optional<double> seconds;

  static Budget nodes(std::uint64_t n) { return {n, std::nullopt}; }
  static Budget wall(double s) { return {0, s}; }
  static Budget unlimited() { return {}; }
};

class BudgetClock {
 public:
  explicit BudgetClock(const Budget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // Counts one node; true once a limit is hit. Sticky.
  bool charge() {
    if (exhausted_) return true;
    if (budget_.node_limit && nodes_ >= budget_.node_limit) return exhausted_ = true;
    ++nodes_;
    if (budget_.seconds && (nodes_ & 0x3FF) == 0 && elapsed() > *budget_.seconds) return exhausted_ = true;
    return false;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace ramsey_p5
