#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramsey_p5/claims.hpp"
#include "ramsey_p5/witness.hpp"

using namespace ramsey_p5;

namespace {

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

// Labelled copies of H in K_n with |H| = n is n! / |Aut(H)|; Aut counted by brute force.
std::uint64_t automorphisms(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  const auto edges = g.edges();
  do {
    bool keeps = true;
    for (const auto& [a, b] : edges)
      if (!g.has_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)])) {
        keeps = false;
        break;
      }
    count += keeps;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST(Claims, ElevenVertexEnumeration) {
  const Claim1Report rep = claim1_check();
  EXPECT_TRUE(rep.holds());
  EXPECT_EQ(rep.size14.found.size(), 2u);
  EXPECT_EQ(rep.size15.found.size(), 1u);
  EXPECT_EQ(rep.size16.found.size(), 0u);
}

TEST(Claims, NamedGraphs) {
  EXPECT_EQ(k4_k4_p3().edge_count(), 14u);
  EXPECT_EQ(k4_k4minus_k3().edge_count(), 14u);
  EXPECT_FALSE(contains_path(k4_k4_p3(), 5));
  EXPECT_FALSE(contains_path(k4_k4minus_k3(), 5));
  EXPECT_FALSE(isomorphic(k4_k4_p3(), k4_k4minus_k3()));
}

TEST(Claims, LabelledCopyCounts) {
  const detail::PairIndex idx(11);
  for (const Graph& h : {k4_k4_p3(), k4_k4minus_k3()}) {
    const auto copies = detail::labelled_copies(h, 11, idx);
    EXPECT_EQ(copies.size(), factorial(11) / automorphisms(h)) << describe(h);
    EXPECT_EQ(std::set<std::uint64_t>(copies.begin(), copies.end()).size(), copies.size());
  }
  EXPECT_EQ(detail::labelled_copies(k4_k4_p3(), 11, idx).size(), 17325u);
  EXPECT_EQ(detail::labelled_copies(k4_k4minus_k3(), 11, idx).size(), 69300u);
}

TEST(Claims, ElevenVertexFourColourContradiction) {
  const Lemma3Report rep = lemma3_check();
  EXPECT_TRUE(rep.arithmetic_holds());
  EXPECT_EQ(rep.pairs, 55);
  EXPECT_EQ(rep.turan, 15);
  EXPECT_EQ(rep.second_lower, 14);
  ASSERT_EQ(rep.splits.size(), 1u);
  EXPECT_EQ(rep.complement_k4s, 0);
  EXPECT_EQ(rep.tallies.size(), 4u);
  std::uint64_t placements = 0;
  for (const auto& t : rep.tallies) {
    placements += t.placements;
    EXPECT_EQ(t.counterexamples, 0u);
    // Two K4s avoiding the edges of K4+K4+P3 would both need the P3 ends.
    if (t.first == "K4+K4+P3" || t.second == "K4+K4+P3") {
      EXPECT_EQ(t.placements, 0u);
    }
  }
  EXPECT_GT(placements, 0u);
  EXPECT_TRUE(rep.counterexamples.empty());
  EXPECT_TRUE(rep.holds());
}

TEST(Claims, ComplementOfExtremalHasNoK4) {
  const Graph c = complement(extremal_p5(11));
  int k4s = 0;
  for (unsigned s = 0; s < (1u << 11); ++s) {
    if (std::popcount(s) != 4) continue;
    bool clique = true;
    for (int a = 0; a < 11; ++a)
      for (int b = a + 1; b < 11; ++b)
        if ((s >> a & 1u) && (s >> b & 1u) && !c.has_edge(a, b)) clique = false;
    k4s += clique;
  }
  EXPECT_EQ(k4s, 0);
}

TEST(Claims, PigeonholeChains) {
  const Lemma1Report three = lemma1_check(3);
  EXPECT_EQ(three.n, 9);
  EXPECT_EQ(three.bound, 12);
  EXPECT_EQ(three.turan, 12);
  EXPECT_EQ(three.edges_at_u, 6);
  EXPECT_EQ(three.degree_u, 8);
  EXPECT_TRUE(three.holds());
  const Lemma1Report two = lemma1_check(2);
  EXPECT_EQ(two.n, 6);
  EXPECT_EQ(two.bound, 8);
  EXPECT_EQ(two.turan, 7);
  EXPECT_TRUE(two.holds());
  const Lemma1Report five = lemma1_check(5);
  EXPECT_EQ(five.n, 17);
  EXPECT_EQ(five.bound, 28);
  EXPECT_EQ(five.turan, 24);
  EXPECT_TRUE(five.holds());
  for (long long r = 1; r <= 100; ++r) EXPECT_TRUE(lemma1_check(r).holds()) << r;
}

TEST(Witness, Values) {
  const std::vector<long long> expected{5, 6, 9, 11, 17, 18, 21, 25, 29, 30, 33, 37};
  for (long long r = 1; r <= 12; ++r) EXPECT_EQ(ramsey_p5_value(r), expected[static_cast<std::size_t>(r - 1)]);
}

TEST(Witness, NativeConstructions) {
  for (int r = 1; r <= native_guaranteed_r; ++r) {
    const WitnessResult w = witness(r);
    ASSERT_TRUE(w.colouring) << r;
    EXPECT_EQ(w.colouring->colours(), r);
    EXPECT_EQ(w.colouring->order(), ramsey_p5_value(r) - 1);
    EXPECT_FALSE(oracle::naive_mono_p5(*w.colouring)) << r;
  }
  EXPECT_THROW(witness(11), unsupported_r);
  EXPECT_THROW(witness(0), std::invalid_argument);
}

TEST(Witness, FromDesignFile) {
  const auto d = search_design(16, DesignMode::steiner, 5, Budget::wall(60)).design;
  ASSERT_TRUE(d);
  const Design back = read_design(write_design(*d));
  EXPECT_EQ(witness_from_design(back, 5).order(), 16);
  const EdgeColouring six = witness_from_design(back, 6);
  EXPECT_EQ(six.order(), 17);
  EXPECT_EQ(six.colours(), 6);
  EXPECT_FALSE(find_mono_p5(six));
  EXPECT_THROW(witness_from_design(back, 7), std::invalid_argument);
}

TEST(Witness, PackingLeaveGetsItsOwnColour) {
  const Design half{8, 4, DesignMode::packing, {{0, 1, 2, 3}, {4, 5, 6, 7}}, std::vector<ParallelClass>{{0, 1}}};
  const EdgeColouring c = witness_from_design(half, 2);
  EXPECT_EQ(c.colours(), 2);
  EXPECT_EQ(c.colour(0, 4), 2);
}
