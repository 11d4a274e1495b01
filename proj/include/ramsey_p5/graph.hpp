#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ramsey_p5/error.hpp"

namespace ramsey_p5 {

using vertex_mask = std::uint64_t;

constexpr vertex_mask bit(int v) { return vertex_mask{1} << v; }

constexpr vertex_mask low_bits(int n) {
  return n >= 64 ? ~vertex_mask{0} : (vertex_mask{1} << n) - 1;
}

// Simple undirected graph on vertices 0..n-1, n <= 64. Each adjacency row is
// one machine word.
class Graph {
 public:
  static constexpr int max_order = 64;

  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > max_order)
      throw order_too_large("graph order " + std::to_string(n) + " outside 0..64");
  }

  Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
    for (auto [u, v] : edge_list) add_edge(u, v);
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.rows_[v] = low_bits(n) & ~bit(v);
    return g;
  }

  static Graph path(int t) {
    Graph g(t);
    for (int v = 0; v + 1 < t; ++v) g.add_edge(v, v + 1);
    return g;
  }

  static Graph cycle(int t) {
    Graph g = path(t);
    if (t >= 3) g.add_edge(0, t - 1);
    return g;
  }

  // Vertex 0 is the centre.
  static Graph star(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
  }

  int order() const { return n_; }
  vertex_mask vertices() const { return low_bits(n_); }
  vertex_mask row(int v) const { return rows_[v]; }

  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }

  void add_edge(int u, int v) {
    check_pair(u, v);
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
  }

  int degree(int v) const { return std::popcount(rows_[v]); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(std::popcount(rows_[v]));
    return twice / 2;
  }

  // Edges (i, j) with i < j in ascending lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (vertex_mask m = rows_[i] & ~low_bits(i + 1); m; m &= m - 1)
        out.emplace_back(i, std::countr_zero(m));
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
      throw std::invalid_argument("invalid edge " + std::to_string(u) + " " + std::to_string(v) +
                                  " for order " + std::to_string(n_));
  }

  int n_ = 0;
  std::array<vertex_mask, max_order> rows_{};
};

// --- algebra -----------------------------------------------------------------

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

// Union of edge sets over a shared vertex set.
inline Graph graph_union(const Graph& g, const Graph& h) {
  if (g.order() != h.order())
    throw order_mismatch("union needs equal orders, got " + std::to_string(g.order()) + " and " +
                         std::to_string(h.order()));
  Graph u = g;
  for (auto [a, b] : h.edges()) u.add_edge(a, b);
  return u;
}

// h's vertices are shifted past g's.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  Graph u(g.order() + h.order());
  for (auto [a, b] : g.edges()) u.add_edge(a, b);
  for (auto [a, b] : h.edges()) u.add_edge(a + shift, b + shift);
  return u;
}

inline Graph disjoint_union(const std::vector<Graph>& parts) {
  Graph u(0);
  for (const auto& p : parts) u = disjoint_union(u, p);
  return u;
}

// perm[v] is the new label of v.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
  return h;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

// --- structure ---------------------------------------------------------------

inline vertex_mask component_of(const Graph& g, int v) {
  vertex_mask seen = bit(v), frontier = bit(v);
  while (frontier) {
    vertex_mask next = 0;
    for (vertex_mask m = frontier; m; m &= m - 1) next |= g.row(std::countr_zero(m));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

// Vertex masks of the connected components, ordered by smallest vertex.
inline std::vector<vertex_mask> components(const Graph& g) {
  std::vector<vertex_mask> out;
  vertex_mask left = g.vertices();
  while (left) {
    const vertex_mask c = component_of(g, std::countr_zero(left));
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline std::vector<int> mask_members(vertex_mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

namespace detail {

inline bool extend_path(const Graph& g, int end, vertex_mask used, int remaining,
                        std::vector<int>& trail) {
  if (remaining == 0) return true;
  for (vertex_mask m = g.row(end) & ~used; m; m &= m - 1) {
    const int w = std::countr_zero(m);
    trail.push_back(w);
    if (extend_path(g, w, used | bit(w), remaining - 1, trail)) return true;
    trail.pop_back();
  }
  return false;
}

inline bool clique_search(const Graph& g, vertex_mask candidates, int need) {
  if (need == 0) return true;
  if (std::popcount(candidates) < need) return false;
  for (vertex_mask m = candidates; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    const vertex_mask later = m & ~bit(v);
    if (clique_search(g, later & g.row(v), need - 1)) return true;
  }
  return false;
}

}  // namespace detail

// A path on t distinct vertices, if one exists. Exhaustive DFS; only
// components with at least t vertices are searched.
inline std::optional<std::vector<int>> find_path(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("path order must be >= 1");
  if (t > g.order()) return std::nullopt;
  for (vertex_mask comp : components(g)) {
    if (std::popcount(comp) < t) continue;
    for (vertex_mask m = comp; m; m &= m - 1) {
      const int s = std::countr_zero(m);
      std::vector<int> trail{s};
      if (detail::extend_path(g, s, bit(s), t - 1, trail)) return trail;
    }
  }
  return std::nullopt;
}

inline bool contains_path(const Graph& g, int t) { return find_path(g, t).has_value(); }

inline bool contains_clique(const Graph& g, int k) {
  if (k <= 0) return true;
  return detail::clique_search(g, g.vertices(), k);
}

// `n=<n>` then one `i j` line per edge.
inline std::string to_text(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << '\n';
  for (auto [a, b] : g.edges()) os << a << ' ' << b << '\n';
  return os.str();
}

}  // namespace ramsey_p5
