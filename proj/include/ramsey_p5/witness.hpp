#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ramsey_p5/budget.hpp"
#include "ramsey_p5/colouring.hpp"
#include "ramsey_p5/design.hpp"
#include "ramsey_p5/design_search.hpp"

namespace ramsey_p5 {

// R_r(P5): 3r+1 (r = 0 mod 4, r != 4), 3r+2 (r = 1 mod 4), 3r (r = 2, 3 mod 4), 11 at r = 4.
inline long long ramsey_p5_value(long long r) {
  if (r < 1) throw std::invalid_argument("colour count must be >= 1");
  if (r == 4) return 11;
  switch (r % 4) {
    case 0: return 3 * r + 1;
    case 1: return 3 * r + 2;
    default: return 3 * r;
  }
}

// Colour counts with a construction that needs no search budget.
constexpr int native_guaranteed_r = 6;
// Largest r attempted natively; beyond it a design file is required.
constexpr int native_attempt_r = 10;

// The four clique families on x1,x2,y1..y4,z1..z4 (labels 0,1,2..5,6..9).
inline std::array<std::vector<std::vector<int>>, 4> k10_clique_families() {
  constexpr int x1 = 0, x2 = 1, y1 = 2, y2 = 3, y3 = 4, y4 = 5, z1 = 6, z2 = 7, z3 = 8, z4 = 9;
  return {{
      {{x1, x2}, {y1, y2, y3, y4}, {z1, z2, z3, z4}},
      {{x1, y1, y2, z3}, {x2, z1, z2, y3}, {y4, z4}},
      {{x1, z1, z2, y4}, {x2, y1, y2, z4}, {z3, y3}},
      {{x1, y3, z4}, {x2, y4, z3}, {y1, y2, z1, z2}},
  }};
}

// 4-colouring of K10 without a monochromatic P5. y1y2 and z1z2 lie in all four
// families; a pair takes the smallest family index containing it.
inline EdgeColouring k10_colouring() {
  const auto families = k10_clique_families();
  std::array<std::array<int, 10>, 10> colour{};
  for (int c = 4; c >= 1; --c)
    for (const auto& clique : families[static_cast<std::size_t>(c - 1)])
      for (int a : clique)
        for (int b : clique)
          if (a != b) colour[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c;
  EdgeColouring out(10, 4);
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b) {
      const int c = colour[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (c == 0) throw std::logic_error("K10 families leave a pair uncovered");
      out.set(a, b, c);
    }
  return out;
}

struct WitnessResult {
  std::optional<EdgeColouring> colouring;
  std::string source;
  bool exhausted = false;  // a design search ran out of budget
};

// Design needed for r colours via the design route: points, mode, classes.
struct DesignRoute {
  int v;
  DesignMode mode;
  int classes;
};

inline DesignRoute design_route(int r) {
  const int v = static_cast<int>(g_of_r(r));
  return {v, r % 4 == 1 ? DesignMode::steiner : DesignMode::covering, r};
}

// Colouring from a resolvable design file. Packings colour their leave with
// an extra colour. If the design yields r-1 colours and r = 2 (mod 4), the
// result is lifted.
inline EdgeColouring witness_from_design(const Design& d, int r) {
  const DesignVerdict dv = verify_design(d);
  if (!dv.ok)
    throw malformed_design(std::string("design fails its ") + to_string(d.mode) + " property at pair " +
                           std::to_string(dv.violations[0].a) + " " + std::to_string(dv.violations[0].b));
  if (!d.resolution) throw missing_resolution("witness needs a resolvable design");
  const int classes = static_cast<int>(d.resolution->size());
  std::optional<int> leave;
  if (d.mode == DesignMode::packing && leave_graph(d).edge_count() > 0) leave = classes + 1;
  EdgeColouring c = design_to_colouring(d, leave);
  if (c.colours() == r) return c;
  if (c.colours() == r - 1 && r % 4 == 2) return lift(c);
  throw std::invalid_argument("design gives " + std::to_string(c.colours()) + " colours, not " + std::to_string(r));
}

// Mono-P5-free colouring of K_{R_r(P5)-1}. r = 1: one colour on K4;
// r = 2 (mod 4): lift of r-1; r = 4: the K10 colouring; otherwise a resolvable
// design on g(r) points found by search within `budget`.
inline WitnessResult witness(int r, const Budget& budget = Budget::unlimited()) {
  if (r < 1) throw std::invalid_argument("colour count must be >= 1");
  if (r > native_attempt_r)
    throw unsupported_r("no native construction for r=" + std::to_string(r) + "; supply a design file");
  if (r == 1) return {EdgeColouring(4, 1), "K4 in one colour", false};
  if (r == 4) return {k10_colouring(), "K10 clique families, smallest index on overlaps", false};
  if (r % 4 == 2) {
    WitnessResult base = witness(r - 1, budget);
    if (base.colouring) base.colouring = lift(*base.colouring);
    base.source = "lift of r=" + std::to_string(r - 1) + " (" + base.source + ")";
    return base;
  }
  const DesignRoute route = design_route(r);
  const DesignSearchResult found = search_design(route.v, route.mode, route.classes, budget);
  const std::string source = std::string("resolvable ") + to_string(route.mode) + " design on " +
                             std::to_string(route.v) + " points, " + std::to_string(route.classes) + " classes";
  if (!found.design) return {std::nullopt, source, found.exhausted};
  return {design_to_colouring(*found.design), source, false};
}

}  // namespace ramsey_p5
