#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey_p5/canonical.hpp"
#include "ramsey_p5/colouring.hpp"
#include "ramsey_p5/graph.hpp"
#include "ramsey_p5/turan.hpp"

namespace ramsey_p5 {

// --- the two 11-vertex, 14-edge P5-free graphs --------------------------------

inline Graph k4_k4_p3() {
  return disjoint_union({Graph::complete(4), Graph::complete(4), Graph::path(3)});
}

inline Graph k4_k4minus_k3() {
  return disjoint_union({Graph::complete(4), k4_minus(), Graph::complete(3)});
}

struct EnumerationCheck {
  int n = 0;
  int m = 0;
  std::vector<Graph> found;
  std::vector<Graph> missing;  // expected but not found
  std::vector<Graph> extra;    // found but not expected
  bool holds() const { return missing.empty() && extra.empty(); }
};

inline EnumerationCheck check_enumeration(int n, int m, const std::vector<Graph>& expected) {
  EnumerationCheck out;
  out.n = n;
  out.m = m;
  out.found = enumerate_p5_free(n, m);
  std::set<CanonicalKey> want, got;
  for (const Graph& g : expected) want.insert(canonical_key(g));
  for (const Graph& g : out.found) {
    got.insert(canonical_key(g));
    if (!want.contains(canonical_key(g))) out.extra.push_back(g);
  }
  for (const Graph& g : expected)
    if (!got.contains(canonical_key(g))) out.missing.push_back(g);
  return out;
}

struct Claim1Report {
  EnumerationCheck size14;  // {K4+K4+P3, K4+K4-+K3}
  EnumerationCheck size15;  // {K4+K4+K3}
  EnumerationCheck size16;  // empty
  bool holds() const { return size14.holds() && size15.holds() && size16.holds(); }
};

inline Claim1Report claim1_check() {
  return {check_enumeration(11, 14, {k4_k4_p3(), k4_k4minus_k3()}),
          check_enumeration(11, 15, {extremal_p5(11)}), check_enumeration(11, 16, {})};
}

// --- the four-colour upper bound on K11 ----------------------------------------

namespace detail {

// Edge sets of graphs on at most 11 vertices as bits of one word.
class PairIndex {
 public:
  explicit PairIndex(int n) : n_(n) {
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) index_[i][j] = index_[j][i] = k++;
  }
  std::uint64_t pair(int i, int j) const { return std::uint64_t{1} << index_[i][j]; }
  std::uint64_t encode(const Graph& g) const {
    std::uint64_t m = 0;
    for (auto [a, b] : g.edges()) m |= pair(a, b);
    return m;
  }
  int order() const { return n_; }

 private:
  int n_;
  std::array<std::array<int, 11>, 11> index_{};
};

// Every distinct labelled copy of h inside K_n, as edge masks.
inline std::vector<std::uint64_t> labelled_copies(const Graph& h, int n, const PairIndex& idx) {
  struct Piece {
    std::vector<std::vector<std::pair<int, int>>> shapes;  // distinct labellings on 0..s-1
    int s;
  };
  std::vector<Piece> pieces;
  for (vertex_mask c : components(h)) {
    const Graph comp = induced_subgraph(h, mask_members(c));
    std::vector<int> perm(static_cast<std::size_t>(comp.order()));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::set<std::vector<std::pair<int, int>>> shapes;
    do {
      shapes.insert(relabel(comp, perm).edges());
    } while (std::next_permutation(perm.begin(), perm.end()));
    pieces.push_back({{shapes.begin(), shapes.end()}, comp.order()});
  }
  std::set<std::uint64_t> out;
  std::vector<int> chosen;
  auto place = [&](auto&& self, std::size_t piece, vertex_mask free, std::uint64_t acc) -> void {
    if (piece == pieces.size()) {
      out.insert(acc);
      return;
    }
    const Piece& p = pieces[piece];
    // Choose p.s vertices from `free` in ascending order.
    auto choose = [&](auto&& pick, vertex_mask avail, int need) -> void {
      if (need == 0) {
        for (const auto& shape : p.shapes) {
          std::uint64_t m = acc;
          for (auto [a, b] : shape) m |= idx.pair(chosen[chosen.size() - p.s + a], chosen[chosen.size() - p.s + b]);
          vertex_mask rest = free;
          for (std::size_t i = chosen.size() - p.s; i < chosen.size(); ++i) rest &= ~bit(chosen[i]);
          self(self, piece + 1, rest, m);
        }
        return;
      }
      for (vertex_mask m = avail; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        chosen.push_back(v);
        pick(pick, m & ~bit(v), need - 1);
        chosen.pop_back();
      }
    };
    choose(choose, free, p.s);
  };
  place(place, 0, low_bits(n), 0);
  return {out.begin(), out.end()};
}

inline bool mask_has_edge(std::uint64_t m, const PairIndex& idx, int a, int b) { return m & idx.pair(a, b); }

inline bool mask_is_clique(std::uint64_t m, const PairIndex& idx, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!mask_has_edge(m, idx, vs[i], vs[j])) return false;
  return true;
}

inline std::vector<vertex_mask> mask_k4s(std::uint64_t m, const PairIndex& idx) {
  std::vector<vertex_mask> out;
  const int n = idx.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (mask_is_clique(m, idx, {a, b, c, d})) out.push_back(bit(a) | bit(b) | bit(c) | bit(d));
  return out;
}

// Whether the 11-vertex graph m spans K4 + K4 + K3.
inline bool spans_k4_k4_k3(std::uint64_t m, const PairIndex& idx) {
  const auto k4s = mask_k4s(m, idx);
  for (std::size_t i = 0; i < k4s.size(); ++i)
    for (std::size_t j = i + 1; j < k4s.size(); ++j) {
      if (k4s[i] & k4s[j]) continue;
      const auto rest = mask_members(low_bits(idx.order()) & ~(k4s[i] | k4s[j]));
      if (rest.size() == 3 && mask_is_clique(m, idx, rest)) return true;
    }
  return false;
}

}  // namespace detail

struct PlacementTally {
  std::string first;   // G1 shape
  std::string second;  // G2 shape
  std::uint64_t placements = 0;  // edge-disjoint labelled copies of G2
  std::uint64_t counterexamples = 0;
};

struct Lemma3Report {
  // (a) arithmetic
  long long pairs = 0;             // e(K11)
  long long turan = 0;             // ex(11, P5)
  long long second_lower = 0;      // ceil((pairs - turan) / 3) when the first class is extremal
  std::vector<std::array<int, 4>> splits;  // e1 >= e2 >= e3 >= e4, each <= 14, sum 55
  // (b) K4 copies in the complement of K4+K4+K3
  int complement_k4s = -1;
  // (c) placements
  std::vector<PlacementTally> tallies;
  std::vector<std::string> counterexamples;

  bool arithmetic_holds() const {
    return pairs == 55 && turan == 15 && second_lower == 14 && splits.size() == 1 &&
           splits[0] == std::array<int, 4>{14, 14, 14, 13};
  }
  bool holds() const { return arithmetic_holds() && complement_k4s == 0 && counterexamples.empty(); }
};

// Checks the K11 four-colour contradiction: class-size arithmetic, the
// complement of the extremal graph being K4-free, and that for each claim
// graph as G1 and every edge-disjoint labelled placement of a claim graph as
// G2, G1 u G2 spans K4+K4+K3 with a K4-free complement.
inline Lemma3Report lemma3_check() {
  Lemma3Report rep;
  constexpr int n = 11;
  rep.pairs = n * (n - 1) / 2;
  rep.turan = ex_p5(n);
  rep.second_lower = (rep.pairs - rep.turan + 2) / 3;
  for (int a = 14; a >= 0; --a)
    for (int b = a; b >= 0; --b)
      for (int c = b; c >= 0; --c) {
        const long long d = rep.pairs - a - b - c;
        if (d >= 0 && d <= c) rep.splits.push_back({a, b, c, static_cast<int>(d)});
      }

  const detail::PairIndex idx(n);
  rep.complement_k4s =
      static_cast<int>(detail::mask_k4s(idx.encode(complement(extremal_p5(n))), idx).size());

  const std::array<Graph, 2> shapes{k4_k4_p3(), k4_k4minus_k3()};
  std::array<std::vector<std::uint64_t>, 2> copies;
  for (std::size_t i = 0; i < 2; ++i) copies[i] = detail::labelled_copies(shapes[i], n, idx);
  const std::uint64_t everything = (std::uint64_t{1} << rep.pairs) - 1;
  for (const Graph& first : shapes) {
    const std::uint64_t g1 = idx.encode(first);
    for (std::size_t s = 0; s < 2; ++s) {
      PlacementTally t{describe(first), describe(shapes[s]), 0, 0};
      for (std::uint64_t g2 : copies[s]) {
        if (g1 & g2) continue;
        ++t.placements;
        const std::uint64_t both = g1 | g2;
        const bool spans = detail::spans_k4_k4_k3(both, idx);
        const bool free_complement = detail::mask_k4s(everything & ~both, idx).empty();
        if (!spans || !free_complement) {
          ++t.counterexamples;
          std::ostringstream os;
          os << "G1=" << t.first << " G2 edges:";
          for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
              if (g2 & idx.pair(a, b)) os << ' ' << a << '-' << b;
          os << (spans ? "" : " (union lacks K4+K4+K3)") << (free_complement ? "" : " (complement has K4)");
          rep.counterexamples.push_back(os.str());
        }
      }
      rep.tallies.push_back(t);
    }
  }
  return rep;
}

// --- pigeonhole upper bounds ----------------------------------------------------

struct Lemma1Report {
  long long r = 0;
  long long n = 0;      // 3r+1, 3r+2 or 3r by residue
  long long b = 0;      // n mod 4
  long long pairs = 0;  // C(n, 2)
  long long bound = 0;  // ceil(pairs / r)
  long long turan = 0;  // ex(n, P5)
  std::string chain;    // the (in)equality chain that was evaluated
  bool chain_holds = false;
  // r = 3 (mod 4): edges at the isolated vertex of the extremal red class
  long long edges_at_u = 0;  // 3(r-1)
  long long degree_u = 0;    // n-1
  bool holds() const { return chain_holds; }
};

// Evaluates the pigeonhole chains in exact integer arithmetic.
inline Lemma1Report lemma1_check(long long r) {
  if (r < 1) throw std::invalid_argument("colour count must be >= 1");
  Lemma1Report rep;
  rep.r = r;
  switch (r % 4) {
    case 0: rep.n = 3 * r + 1; break;
    case 1: rep.n = 3 * r + 2; break;
    default: rep.n = 3 * r; break;
  }
  const long long n = rep.n;
  rep.b = n % 4;
  rep.pairs = n * (n - 1) / 2;
  rep.bound = (rep.pairs + r - 1) / r;
  rep.turan = ex_p5(n);
  const PigeonholeRelation rel = pigeonhole_check(n, r).relation;
  std::ostringstream os;
  switch (r % 4) {
    case 0:
    case 1:
      // ceil(C(n,2)/r) >= 3n/2 > ex + 1, with b = 1 and ex = (3n-3)/2
      os << "ceil(" << rep.pairs << "/" << r << ")=" << rep.bound << " >= 3n/2=" << 3 * n << "/2 > ex+1="
         << rep.turan + 1;
      rep.chain_holds = rep.b == 1 && 2 * rep.turan == 3 * n - 3 && 2 * rep.bound >= 3 * n &&
                        3 * n > 2 * (rep.turan + 1) && rel == PigeonholeRelation::forced;
      break;
    case 2:
      // ceil(C(n,2)/r) = ceil(3(n-1)/2) = (3(n-1)+1)/2 = ex + 1, with b = 2
      os << "ceil(" << rep.pairs << "/" << r << ")=" << rep.bound << " = (3(n-1)+1)/2=" << (3 * (n - 1) + 1) / 2
         << " = ex+1=" << rep.turan + 1;
      rep.chain_holds = rep.b == 2 && 2 * rep.turan == 3 * n - 4 && rep.pairs * 2 == 3 * (n - 1) * r &&
                        2 * rep.bound == 3 * (n - 1) + 1 && rep.bound == rep.turan + 1 &&
                        rel == PigeonholeRelation::forced;
      break;
    case 3:
      // ceil(C(n,2)/r) = 3(n-1)/2 = ex, with b = 1; then 3(r-1) < n-1
      rep.edges_at_u = 3 * (r - 1);
      rep.degree_u = n - 1;
      os << "ceil(" << rep.pairs << "/" << r << ")=" << rep.bound << " = 3(n-1)/2=" << 3 * (n - 1) << "/2 = ex="
         << rep.turan << "; edges at u " << rep.edges_at_u << " < degree " << rep.degree_u;
      rep.chain_holds = rep.b == 1 && 2 * rep.bound == 3 * (n - 1) && rep.bound == rep.turan &&
                        rel == PigeonholeRelation::extremal && rep.edges_at_u < rep.degree_u;
      break;
  }
  rep.chain = os.str();
  return rep;
}

}  // namespace ramsey_p5
