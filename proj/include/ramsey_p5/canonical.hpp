#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ramsey_p5/graph.hpp"

namespace ramsey_p5 {

// Byte string equal for two graphs exactly when they are isomorphic.
struct CanonicalKey {
  std::string bytes;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

constexpr int canonical_max_order = 16;

namespace detail {

using Partition = std::vector<vertex_mask>;

// Equitable refinement. Cells split by neighbour count into a splitter cell,
// fragments ordered by that count; depends only on the partition's shape, so
// it commutes with relabelling.
inline void refine(const Graph& g, Partition& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
      const vertex_mask splitter = cells[si];
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const vertex_mask cell = cells[ci];
        if (std::popcount(cell) == 1) continue;
        std::map<int, vertex_mask> by_count;
        for (vertex_mask m = cell; m; m &= m - 1) {
          const int v = std::countr_zero(m);
          by_count[std::popcount(g.row(v) & splitter)] |= bit(v);
        }
        if (by_count.size() == 1) continue;
        Partition next(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(ci));
        for (const auto& [count, frag] : by_count) next.push_back(frag);
        next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(ci) + 1, cells.end());
        cells = std::move(next);
        changed = true;
        break;
      }
    }
  }
}

inline std::string leaf_code(const Graph& g, const Partition& cells) {
  const int n = g.order();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (vertex_mask c : cells) order.push_back(std::countr_zero(c));
  std::string code(1, static_cast<char>(n));
  unsigned char acc = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      acc = static_cast<unsigned char>((acc << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0));
      if (++filled == 8) {
        code.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) code.push_back(static_cast<char>(acc << (8 - filled)));
  return code;
}

inline bool twins(const Graph& g, int u, int w) {
  return (g.row(u) & ~bit(w)) == (g.row(w) & ~bit(u));
}

// Individualise-and-refine over every branch, keeping the smallest leaf code.
// Twins in the target cell give isomorphic subtrees, so one per twin group.
inline void canonical_search(const Graph& g, Partition cells, std::string& best) {
  refine(g, cells);
  std::size_t target = cells.size();
  int target_size = 65;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int s = std::popcount(cells[i]);
    if (s > 1 && s < target_size) {
      target = i;
      target_size = s;
    }
  }
  if (target == cells.size()) {
    std::string code = leaf_code(g, cells);
    if (best.empty() || code < best) best = std::move(code);
    return;
  }
  const vertex_mask cell = cells[target];
  std::vector<int> chosen;
  for (vertex_mask m = cell; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    bool skip = false;
    for (int w : chosen)
      if (twins(g, v, w)) {
        skip = true;
        break;
      }
    if (skip) continue;
    chosen.push_back(v);
    Partition next(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
    next.push_back(bit(v));
    next.push_back(cell & ~bit(v));
    next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
    canonical_search(g, std::move(next), best);
  }
}

}  // namespace detail

inline CanonicalKey canonical_key(const Graph& g) {
  if (g.order() > canonical_max_order)
    throw order_too_large("canonical_key supports order <= 16, got " + std::to_string(g.order()));
  if (g.order() == 0) return {std::string(1, '\0')};
  std::string best;
  detail::canonical_search(g, detail::Partition{g.vertices()}, best);
  return {std::move(best)};
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_key(a) == canonical_key(b);
}

}  // namespace ramsey_p5

template <>
struct std::hash<ramsey_p5::CanonicalKey> {
  std::size_t operator()(const ramsey_p5::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
