#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ramsey_p5/canonical.hpp"
#include "ramsey_p5/graph.hpp"

namespace ramsey_p5 {

// n = 4a + b with 0 <= b <= 3.
struct TuranForm {
  int a = 0;
  int b = 0;
};

inline TuranForm turan_form(int n) {
  if (n < 0) throw std::invalid_argument("order must be non-negative");
  return {n / 4, n % 4};
}

// Maximum edge count of a P5-free graph on n vertices: 6a + b(b-1)/2.
inline long long ex_p5(long long n) {
  if (n < 0) throw std::invalid_argument("order must be non-negative");
  const long long a = n / 4, b = n % 4;
  return 6 * a + b * (b - 1) / 2;
}

// a disjoint K4's followed by K_b.
inline Graph extremal_p5(int n) {
  const auto [a, b] = turan_form(n);
  std::vector<Graph> parts(static_cast<std::size_t>(a), Graph::complete(4));
  if (b > 0) parts.push_back(Graph::complete(b));
  return disjoint_union(parts);
}

inline Graph k4_minus() {
  Graph g = Graph::complete(4);
  g.remove_edge(2, 3);
  return g;
}

// Centres 0 and 1; `left` leaves on 0, `right` leaves on 1.
inline Graph double_star(int left, int right) {
  Graph g(2 + left + right);
  g.add_edge(0, 1);
  for (int i = 0; i < left; ++i) g.add_edge(0, 2 + i);
  for (int i = 0; i < right; ++i) g.add_edge(1, 2 + left + i);
  return g;
}

// Triangle 0,1,2 with `pendants` extra leaves hanging off vertex 0.
inline Graph pendant_triangle(int pendants) {
  Graph g(3 + pendants);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  for (int i = 0; i < pendants; ++i) g.add_edge(0, 3 + i);
  return g;
}

namespace detail {

inline void add_unique(std::map<CanonicalKey, Graph>& into, const Graph& g) {
  into.emplace(canonical_key(g), g);
}

inline std::vector<Graph> values_of(const std::map<CanonicalKey, Graph>& m) {
  std::vector<Graph> out;
  out.reserve(m.size());
  for (const auto& [k, g] : m) out.push_back(g);
  return out;
}

}  // namespace detail

// Connected P5-free graphs with s vertices and e edges, one per isomorphism
// class, ordered by canonical key. Families: trees of diameter <= 3 (stars and
// double stars), a triangle with pendants at one vertex, C4, K4-, K4.
inline std::vector<Graph> component_catalogue(int s, int e) {
  if (s < 1) throw std::invalid_argument("component order must be >= 1");
  if (s > canonical_max_order) throw order_too_large("component order above 16");
  std::map<CanonicalKey, Graph> found;
  if (e == s - 1) {
    detail::add_unique(found, Graph::star(s));
    for (int left = 1; 2 * left <= s - 2; ++left) detail::add_unique(found, double_star(left, s - 2 - left));
  }
  if (e == s && s >= 3) detail::add_unique(found, pendant_triangle(s - 3));
  if (s == 4) {
    if (e == 4) detail::add_unique(found, Graph::cycle(4));
    if (e == 5) detail::add_unique(found, k4_minus());
    if (e == 6) detail::add_unique(found, Graph::complete(4));
  }
  return detail::values_of(found);
}

constexpr int enumerate_max_order = 12;

namespace detail {

struct ComponentChoice {
  int s;
  int e;
  std::size_t index;
  auto operator<=>(const ComponentChoice&) const = default;
};

// Every component of a P5-free graph has e <= 3s/2 (K4 attains it).
inline bool edges_reachable(int n, int m) { return m >= 0 && 2 * m <= 3 * n; }

inline void compose(int n_left, int m_left, ComponentChoice cap, std::vector<Graph>& parts,
                    std::map<std::pair<int, int>, std::vector<Graph>>& cache,
                    std::map<CanonicalKey, Graph>& out) {
  if (n_left == 0) {
    if (m_left == 0) add_unique(out, disjoint_union(parts));
    return;
  }
  if (!edges_reachable(n_left, m_left)) return;
  for (int s = std::min(n_left, cap.s); s >= 1; --s) {
    for (int e = std::min(m_left, s * (s - 1) / 2); e >= 0; --e) {
      auto it = cache.find({s, e});
      if (it == cache.end()) it = cache.emplace(std::pair{s, e}, component_catalogue(s, e)).first;
      const auto& entries = it->second;
      for (std::size_t i = entries.size(); i-- > 0;) {
        const ComponentChoice here{s, e, i};
        if (cap < here) continue;
        parts.push_back(entries[i]);
        compose(n_left - s, m_left - e, here, parts, cache, out);
        parts.pop_back();
      }
    }
  }
}

}  // namespace detail

// All P5-free graphs with n vertices and m edges up to isomorphism, composed
// from catalogue components and ordered by canonical key.
inline std::vector<Graph> enumerate_p5_free(int n, int m) {
  if (n > enumerate_max_order)
    throw order_too_large("enumerate_p5_free supports order <= 12, got " + std::to_string(n));
  if (n < 0) throw std::invalid_argument("order must be non-negative");
  std::map<CanonicalKey, Graph> out;
  std::map<std::pair<int, int>, std::vector<Graph>> cache;
  std::vector<Graph> parts;
  if (n == 0) {
    if (m == 0) detail::add_unique(out, Graph(0));
    return detail::values_of(out);
  }
  detail::compose(n, m, {n, n * (n - 1) / 2, ~std::size_t{0}}, parts, cache, out);
  return detail::values_of(out);
}

// Short name like "K4+K4-+K3"; components ordered by size then edge count.
inline std::string describe(const Graph& g) {
  if (g.order() == 0) return "empty";
  std::vector<std::tuple<int, int, std::string>> named;
  for (vertex_mask c : components(g)) {
    const Graph h = induced_subgraph(g, mask_members(c));
    const int s = h.order();
    const int e = static_cast<int>(h.edge_count());
    std::string name;
    if (e == s * (s - 1) / 2)
      name = "K" + std::to_string(s);
    else if (s <= canonical_max_order && isomorphic(h, Graph::path(s)))
      name = "P" + std::to_string(s);
    else if (s <= canonical_max_order && isomorphic(h, Graph::cycle(s)))
      name = "C" + std::to_string(s);
    else if (s == 4 && e == 5)
      name = "K4-";
    else if (s <= canonical_max_order && isomorphic(h, Graph::star(s)))
      name = "S" + std::to_string(s);
    else
      name = "G(" + std::to_string(s) + "," + std::to_string(e) + ")";
    named.emplace_back(s, e, name);
  }
  std::sort(named.begin(), named.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(y), std::get<1>(y)) < std::tie(std::get<0>(x), std::get<1>(x));
  });
  std::string out;
  for (const auto& [s, e, name] : named) {
    if (!out.empty()) out += '+';
    out += name;
  }
  return out;
}

}  // namespace ramsey_p5
