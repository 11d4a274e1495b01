#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "ramsey_p5/canonical.hpp"
#include "ramsey_p5/claims.hpp"
#include "ramsey_p5/turan.hpp"

using namespace ramsey_p5;

namespace {

// P5-free graphs grown one vertex at a time: deleting any vertex of a P5-free
// graph leaves a P5-free graph, so every class on n vertices extends one on n-1.
// Entry n maps canonical key to a representative.
const std::vector<std::map<CanonicalKey, Graph>>& grown_p5_free() {
  static const auto table = [] {
    std::vector<std::map<CanonicalKey, Graph>> out(1);
    out[0].emplace(canonical_key(Graph(0)), Graph(0));
    for (int n = 1; n <= 10; ++n) {
      std::map<CanonicalKey, Graph> next;
      for (const auto& [key, g] : out.back())
        for (unsigned nb = 0; nb < (1u << (n - 1)); ++nb) {
          Graph h(n);
          for (const auto& [a, b] : g.edges()) h.add_edge(a, b);
          for (int v = 0; v < n - 1; ++v)
            if (nb >> v & 1u) h.add_edge(v, n - 1);
          if (oracle::has_path(h, 5)) continue;
          next.emplace(canonical_key(h), h);
        }
      out.push_back(std::move(next));
    }
    return out;
  }();
  return table;
}

// Maximum edge count over all labelled graphs on n vertices with no P5.
int brute_force_ex(int n) {
  int best = 0;
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t m = 0; m < total; ++m) {
    const int e = std::popcount(m);
    if (e <= best) continue;
    if (!oracle::has_path(oracle::graph_from_mask(n, m), 5)) best = e;
  }
  return best;
}

std::set<CanonicalKey> keys(const std::vector<Graph>& gs) {
  std::set<CanonicalKey> out;
  for (const Graph& g : gs) out.insert(canonical_key(g));
  return out;
}

}  // namespace

TEST(Turan, Values) {
  EXPECT_EQ(ex_p5(11), 15);
  EXPECT_EQ(ex_p5(0), 0);
  EXPECT_EQ(ex_p5(9), 12);
  EXPECT_EQ(ex_p5(6), 7);
  EXPECT_EQ(ex_p5(4), 6);
  EXPECT_EQ(ex_p5(25), 36);
}

TEST(Turan, MatchesBruteForceUpToSix) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(ex_p5(n), brute_force_ex(n)) << n;
}

TEST(Turan, MatchesGrownClassesUpToTen) {
  const auto& grown = grown_p5_free();
  for (int n = 0; n <= 10; ++n) {
    long long best = 0;
    for (const auto& [k, g] : grown[static_cast<std::size_t>(n)])
      best = std::max<long long>(best, static_cast<long long>(g.edge_count()));
    EXPECT_EQ(ex_p5(n), best) << n;
  }
}

TEST(Turan, ExtremalGraphs) {
  for (int n = 0; n <= 40; ++n) {
    const Graph g = extremal_p5(n);
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(static_cast<long long>(g.edge_count()), ex_p5(n));
    EXPECT_FALSE(contains_path(g, 5));
  }
  EXPECT_EQ(describe(extremal_p5(11)), "K4+K4+K3");
  EXPECT_EQ(describe(extremal_p5(9)), "K4+K4+K1");
  const TuranForm f = turan_form(11);
  EXPECT_EQ(f.a, 2);
  EXPECT_EQ(f.b, 3);
}

TEST(Turan, Names) {
  EXPECT_EQ(describe(k4_k4minus_k3()), "K4+K4-+K3");
  EXPECT_EQ(describe(k4_k4_p3()), "K4+K4+P3");
  EXPECT_EQ(describe(Graph::cycle(4)), "C4");
  EXPECT_EQ(describe(Graph::star(5)), "S5");
}

TEST(Catalogue, Examples) {
  const auto k4 = component_catalogue(4, 6);
  ASSERT_EQ(k4.size(), 1u);
  EXPECT_TRUE(isomorphic(k4[0], Graph::complete(4)));
  const auto k4m = component_catalogue(4, 5);
  ASSERT_EQ(k4m.size(), 1u);
  EXPECT_TRUE(isomorphic(k4m[0], k4_minus()));
  EXPECT_TRUE(component_catalogue(5, 7).empty());
  EXPECT_THROW(component_catalogue(0, 0), std::invalid_argument);
  EXPECT_THROW(component_catalogue(17, 16), order_too_large);
}

TEST(Catalogue, MatchesGrownConnectedClasses) {
  const auto& grown = grown_p5_free();
  for (int s = 1; s <= 10; ++s) {
    std::map<int, std::set<CanonicalKey>> expected;
    for (const auto& [k, g] : grown[static_cast<std::size_t>(s)])
      if (oracle::connected(g)) expected[static_cast<int>(g.edge_count())].insert(k);
    for (int e = 0; e <= s * (s - 1) / 2; ++e) {
      const auto got = component_catalogue(s, e);
      for (const Graph& g : got) {
        EXPECT_TRUE(oracle::connected(g));
        EXPECT_EQ(static_cast<int>(g.edge_count()), e);
        EXPECT_FALSE(oracle::has_path(g, 5));
      }
      EXPECT_EQ(keys(got), expected[e]) << "s=" << s << " e=" << e;
    }
  }
}

TEST(Enumerate, Examples) {
  const auto top = enumerate_p5_free(11, 15);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_TRUE(isomorphic(top[0], extremal_p5(11)));
  EXPECT_EQ(keys(enumerate_p5_free(11, 14)), keys({k4_k4_p3(), k4_k4minus_k3()}));
  EXPECT_TRUE(enumerate_p5_free(5, 7).empty());
  EXPECT_TRUE(enumerate_p5_free(11, 16).empty());
  EXPECT_THROW(enumerate_p5_free(13, 0), order_too_large);
  ASSERT_EQ(enumerate_p5_free(0, 0).size(), 1u);
}

TEST(Enumerate, MatchesGrownClasses) {
  const auto& grown = grown_p5_free();
  for (int n = 0; n <= 10; ++n) {
    std::map<int, std::set<CanonicalKey>> expected;
    for (const auto& [k, g] : grown[static_cast<std::size_t>(n)]) expected[static_cast<int>(g.edge_count())].insert(k);
    for (int m = 0; m <= n * (n - 1) / 2; ++m) EXPECT_EQ(keys(enumerate_p5_free(n, m)), expected[m]) << n << " " << m;
  }
}

TEST(Enumerate, NonEmptyIffBelowTuran) {
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      const auto found = enumerate_p5_free(n, m);
      EXPECT_EQ(!found.empty(), m <= ex_p5(n)) << n << " " << m;
      for (const Graph& g : found) {
        EXPECT_FALSE(contains_path(g, 5));
        EXPECT_EQ(static_cast<int>(g.edge_count()), m);
      }
    }
}

TEST(Enumerate, ExtremalIsUnique) {
  for (int n = 0; n <= 12; ++n) {
    const auto top = enumerate_p5_free(n, static_cast<int>(ex_p5(n)));
    ASSERT_EQ(top.size(), 1u) << n;
    EXPECT_TRUE(isomorphic(top[0], extremal_p5(n)));
  }
}
