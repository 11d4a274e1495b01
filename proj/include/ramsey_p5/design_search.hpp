#pragma once

#include <bit>
#include <optional>
#include <vector>

#include "ramsey_p5/budget.hpp"
#include "ramsey_p5/design.hpp"

namespace ramsey_p5 {

struct DesignSearchResult {
  std::optional<Design> design;
  bool exhausted = false;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

namespace detail {

// Backtracking over parallel classes. Class 1 is the natural partition
// {0,1,2,3},{4,5,6,7},...; each block is built around the smallest point not
// yet placed in its class, so blocks come out sorted; a class's first block
// (the one holding 0) may not precede the previous class's first block.
class ResolvableSearch {
 public:
  ResolvableSearch(int v, DesignMode mode, int classes, const Budget& budget)
      : v_(v), mode_(mode), classes_(classes), all_(low_bits(v)), clock_(budget) {}

  DesignSearchResult run() {
    for (int p = 0; p < v_; p += 4) {
      const Block b{p, p + 1, p + 2, p + 3};
      current_.push_back(b);
      cover(b);
    }
    built_.push_back(current_);
    current_.clear();
    DesignSearchResult out;
    if (next_class()) out.design = assemble();
    out.exhausted = !out.design && clock_.exhausted();
    out.nodes = clock_.nodes();
    out.seconds = clock_.elapsed();
    return out;
  }

 private:
  bool strict() const { return mode_ != DesignMode::covering; }

  void cover(const Block& b) {
    for (int x : b)
      for (int y : b)
        if (x != y) covered_[x] |= bit(y);
  }

  int uncovered(int x) const { return std::popcount(all_ & ~bit(x) & ~covered_[x]); }

  bool complete_cover() const {
    for (int x = 0; x < v_; ++x)
      if (uncovered(x)) return false;
    return true;
  }

  bool next_class() {
    if (static_cast<int>(built_.size()) == classes_) return mode_ != DesignMode::covering || complete_cover();
    placed_ = 0;
    return fill();
  }

  bool fill() {
    if (placed_ == all_) {
      built_.push_back(current_);
      const vertex_mask saved = placed_;
      std::vector<Block> saved_class = std::move(current_);
      current_.clear();
      if (next_class()) return true;
      current_ = std::move(saved_class);
      built_.pop_back();
      placed_ = saved;
      return false;
    }
    const int p = std::countr_zero(all_ & ~placed_);
    const vertex_mask free = all_ & ~placed_ & ~bit(p);
    const vertex_mask c1 = strict() ? free & ~covered_[p] : free;
    // Slots left for a point once placed in this class.
    const int slots_after = 3 * (classes_ - static_cast<int>(built_.size()) - 1);
    const bool first_block = p == 0;
    const Block floor = first_block ? built_.back().front() : Block{};

    for (vertex_mask m1 = c1; m1; m1 &= m1 - 1) {
      const int q1 = std::countr_zero(m1);
      if (first_block && q1 < floor[1]) continue;
      const vertex_mask c2 = (strict() ? c1 & ~covered_[q1] : c1) & ~low_bits(q1 + 1);
      for (vertex_mask m2 = c2; m2; m2 &= m2 - 1) {
        const int q2 = std::countr_zero(m2);
        if (first_block && q1 == floor[1] && q2 < floor[2]) continue;
        const vertex_mask c3 = (strict() ? c2 & ~covered_[q2] : c2) & ~low_bits(q2 + 1);
        for (vertex_mask m3 = c3; m3; m3 &= m3 - 1) {
          const int q3 = std::countr_zero(m3);
          if (first_block && q1 == floor[1] && q2 == floor[2] && q3 < floor[3]) continue;
          if (clock_.charge()) return false;
          const Block b{p, q1, q2, q3};
          const std::array<vertex_mask, 4> saved{covered_[p], covered_[q1], covered_[q2], covered_[q3]};
          cover(b);
          bool feasible = true;
          if (mode_ == DesignMode::covering)
            for (int x : b)
              if (uncovered(x) > slots_after) feasible = false;
          if (feasible) {
            placed_ |= bit(p) | bit(q1) | bit(q2) | bit(q3);
            current_.push_back(b);
            if (fill()) return true;
            current_.pop_back();
            placed_ &= ~(bit(p) | bit(q1) | bit(q2) | bit(q3));
          }
          for (std::size_t i = 0; i < 4; ++i) covered_[b[i]] = saved[i];
          if (clock_.exhausted()) return false;
        }
      }
    }
    return false;
  }

  Design assemble() const {
    Design d;
    d.v = v_;
    d.mode = mode_;
    std::vector<ParallelClass> res;
    for (const auto& cls : built_) {
      ParallelClass idx;
      for (const Block& b : cls) {
        idx.push_back(d.blocks.size());
        d.blocks.push_back(b);
      }
      res.push_back(std::move(idx));
    }
    d.resolution = std::move(res);
    return normalized(d);
  }

  int v_;
  DesignMode mode_;
  int classes_;
  vertex_mask all_;
  BudgetClock clock_;
  std::array<vertex_mask, 64> covered_{};
  vertex_mask placed_ = 0;
  std::vector<Block> current_;
  std::vector<std::vector<Block>> built_;
};

}  // namespace detail

// Resolvable design on v points with the given number of parallel classes.
// Throws infeasible_parameters when the counts rule a design out.
inline DesignSearchResult search_design(int v, DesignMode mode, int classes, const Budget& budget) {
  if (v < 4 || v % 4 != 0) throw infeasible_parameters("v must be a positive multiple of 4");
  if (v > Graph::max_order) throw infeasible_parameters("search supports v <= 64");
  if (classes < 1) throw infeasible_parameters("need at least one parallel class");
  switch (mode) {
    case DesignMode::steiner:
      if (v % 12 != 4)
        throw infeasible_parameters("a resolvable S(2,4,v) needs v = 4 (mod 12), got v=" + std::to_string(v));
      if (3 * classes != v - 1)
        throw infeasible_parameters("a resolvable S(2,4," + std::to_string(v) + ") has exactly " +
                                    std::to_string((v - 1) / 3) + " classes");
      break;
    case DesignMode::covering:
      if (3 * classes < v - 1)
        throw infeasible_parameters(std::to_string(classes) + " classes cannot cover all pairs on " +
                                    std::to_string(v) + " points");
      break;
    case DesignMode::packing:
      if (3 * classes > v - 1)
        throw infeasible_parameters(std::to_string(classes) + " classes must repeat a pair on " +
                                    std::to_string(v) + " points");
      break;
  }
  return detail::ResolvableSearch(v, mode, classes, budget).run();
}

}  // namespace ramsey_p5
