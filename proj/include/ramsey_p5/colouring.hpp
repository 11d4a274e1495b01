#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey_p5/graph.hpp"
#include "ramsey_p5/turan.hpp"

namespace ramsey_p5 {

// r-colouring of the edges of K_n. Colours are 1..r; every pair has exactly one.
class EdgeColouring {
 public:
  EdgeColouring() = default;

  // Every pair starts in colour `fill`.
  EdgeColouring(int n, int r, int fill = 1) : n_(n), r_(r) {
    if (n < 0 || n > Graph::max_order)
      throw order_too_large("colouring order " + std::to_string(n) + " outside 0..64");
    if (r < 1) throw std::invalid_argument("colour count must be >= 1");
    check_colour(fill);
    colours_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                    static_cast<std::uint8_t>(fill));
  }

  int order() const { return n_; }
  int colours() const { return r_; }

  int colour(int i, int j) const { return colours_[index(i, j)]; }

  void set(int i, int j, int c) {
    check_colour(c);
    colours_[index(i, j)] = static_cast<std::uint8_t>(c);
    colours_[index(j, i)] = static_cast<std::uint8_t>(c);
  }

  Graph colour_class(int c) const {
    Graph g(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (colour(i, j) == c) g.add_edge(i, j);
    return g;
  }

  friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
      throw std::out_of_range("pair " + std::to_string(i) + " " + std::to_string(j) +
                              " outside K_" + std::to_string(n_));
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  void check_colour(int c) const {
    if (c < 1 || c > r_)
      throw std::out_of_range("colour " + std::to_string(c) + " outside 1.." + std::to_string(r_));
  }

  int n_ = 0;
  int r_ = 1;
  std::vector<std::uint8_t> colours_;
};

struct MonoPath {
  int colour = 0;
  std::vector<int> path;  // five vertices, consecutive ones joined in `colour`
};

inline std::optional<MonoPath> find_mono_path(const EdgeColouring& c, int t) {
  for (int colour = 1; colour <= c.colours(); ++colour)
    if (auto p = find_path(c.colour_class(colour), t)) return MonoPath{colour, *p};
  return std::nullopt;
}

inline std::optional<MonoPath> find_mono_p5(const EdgeColouring& c) { return find_mono_path(c, 5); }

// Adds vertex n joined to everything in the new colour r+1.
inline EdgeColouring lift(const EdgeColouring& c) {
  const int n = c.order();
  EdgeColouring out(n + 1, c.colours() + 1, c.colours() + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.set(i, j, c.colour(i, j));
  return out;
}

// Largest monochromatic component order across all colours.
inline int largest_mono_component(const EdgeColouring& c) {
  int best = c.order() > 0 ? 1 : 0;
  for (int colour = 1; colour <= c.colours(); ++colour)
    for (vertex_mask comp : components(c.colour_class(colour)))
      best = std::max(best, std::popcount(comp));
  return best;
}

enum class PigeonholeRelation {
  forced,        // bound > ex: the fullest colour must hold a P5
  extremal,      // bound == ex: the fullest colour is exactly extremal
  inconclusive,  // bound < ex
};

inline const char* to_string(PigeonholeRelation r) {
  switch (r) {
    case PigeonholeRelation::forced: return "forced";
    case PigeonholeRelation::extremal: return "extremal";
    case PigeonholeRelation::inconclusive: return "inconclusive";
  }
  return "?";
}

struct PigeonholeReport {
  long long n = 0;
  long long r = 0;
  long long bound = 0;  // ceil(C(n,2) / r)
  long long turan = 0;  // ex(n, P5)
  PigeonholeRelation relation = PigeonholeRelation::inconclusive;
};

inline PigeonholeReport pigeonhole_check(long long n, long long r) {
  if (r < 1) throw std::invalid_argument("colour count must be >= 1");
  if (n < 0) throw std::invalid_argument("order must be non-negative");
  PigeonholeReport rep;
  rep.n = n;
  rep.r = r;
  const long long pairs = n * (n - 1) / 2;
  rep.bound = (pairs + r - 1) / r;
  rep.turan = ex_p5(n);
  rep.relation = rep.bound > rep.turan    ? PigeonholeRelation::forced
                 : rep.bound == rep.turan ? PigeonholeRelation::extremal
                                          : PigeonholeRelation::inconclusive;
  return rep;
}

}  // namespace ramsey_p5
