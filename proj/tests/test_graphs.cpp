#include <gtest/gtest.h>

#include <random>

#include "homtopo/corpus.hpp"
#include "homtopo/errors.hpp"
#include "homtopo/graphs.hpp"
#include "oracles.hpp"

using namespace homtopo;

TEST(Families, CompleteGraph) {
  const Graph k3 = complete_graph(3);
  EXPECT_EQ(k3.order(), 3);
  EXPECT_EQ(k3.edge_count(), 3u);
  EXPECT_FALSE(k3.has_loops());
}

TEST(Families, KneserTwoFiveIsPetersen) {
  const Graph k = make_family("Kneser:2,5");
  EXPECT_EQ(k.order(), 10);
  // brute-force count of disjoint pairs of 2-subsets of [5]
  int disjoint = 0;
  for (int a = 0; a < 32; ++a)
    for (int b = a + 1; b < 32; ++b)
      if (__builtin_popcount(a) == 2 && __builtin_popcount(b) == 2 && (a & b) == 0) ++disjoint;
  EXPECT_EQ(k.edge_count(), static_cast<std::size_t>(disjoint));
  EXPECT_EQ(k.edge_count(), 15u);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(k.degree(v), 3);
  EXPECT_TRUE(are_isomorphic(k, petersen_graph()));
}

TEST(Families, KneserVerticesAreLexicographicSubsets) {
  const Graph k = kneser_graph(2, 4);
  // {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}: {0,1} is disjoint only from {2,3}
  EXPECT_TRUE(k.adjacent(0, 5));
  EXPECT_FALSE(k.adjacent(0, 1));
  EXPECT_EQ(k.edge_count(), 3u);
}

TEST(Families, QGraph) {
  const Graph q = make_family("Q");
  EXPECT_EQ(q.order(), 2);
  EXPECT_TRUE(q.adjacent(0, 1));
  EXPECT_TRUE(q.has_loop(0));
  EXPECT_FALSE(q.has_loop(1));
  EXPECT_EQ(q.edge_count(), 2u);
}

TEST(Families, NamesParse) {
  EXPECT_EQ(make_family("K5"), complete_graph(5));
  EXPECT_EQ(make_family("K4o"), looped_complete_graph(4));
  EXPECT_EQ(make_family("C7"), cycle_graph(7));
  EXPECT_EQ(make_family("L3"), path_graph(3));
  EXPECT_EQ(make_family("star:3").order(), 4);
  EXPECT_EQ(make_family("E4"), empty_graph(4));
}

TEST(Families, OutOfRangeIsDomainError) {
  EXPECT_THROW(cycle_graph(2), DomainError);
  EXPECT_THROW(path_graph(0), DomainError);
  EXPECT_THROW(kneser_graph(3, 5), DomainError);
  EXPECT_THROW(complete_graph(65), DomainError);
  EXPECT_THROW(make_family("X9"), DomainError);
  EXPECT_THROW(make_family("C"), DomainError);
}

TEST(Complement, Examples) {
  const Graph c = complement(complete_graph(3), false);
  EXPECT_EQ(c.edge_count(), 0u);
  const Graph l = complement(complete_graph(3), true);
  EXPECT_EQ(l.edge_count(), 3u);
  for (int v = 0; v < 3; ++v) {
    EXPECT_TRUE(l.has_loop(v));
    EXPECT_EQ(l.degree(v), 0);
  }
  EXPECT_EQ(complement(complement(cycle_graph(5), false), false), cycle_graph(5));
  EXPECT_TRUE(are_isomorphic(cycle_graph(5), complement(cycle_graph(5), false)));
}

TEST(CommonNeighbors, Examples) {
  EXPECT_EQ(common_neighbors(complete_graph(4), VertexSet{0b0011}), VertexSet{0b1100});
  EXPECT_EQ(common_neighbors(cycle_graph(5), VertexSet{0b00101}), VertexSet{0b00010});
  EXPECT_EQ(common_neighbors(petersen_graph(), VertexSet{}), petersen_graph().vertices());
}

TEST(Derived, Examples) {
  const Graph p = direct_product(complete_graph(2), complete_graph(2));
  EXPECT_EQ(p.order(), 4);
  EXPECT_EQ(p.edge_count(), 2u);
  EXPECT_TRUE(p.adjacent(0 * 2 + 0, 1 * 2 + 1));
  EXPECT_TRUE(p.adjacent(0 * 2 + 1, 1 * 2 + 0));
  const Graph lc = loop_completion(complete_graph(2));
  EXPECT_TRUE(lc.has_loop(0) && lc.has_loop(1) && lc.adjacent(0, 1));
  EXPECT_EQ(induced_subgraph(cycle_graph(5), VertexSet{0b111}), path_graph(3));
  const Graph u = disjoint_union(complete_graph(2), cycle_graph(3));
  EXPECT_EQ(u.order(), 5);
  EXPECT_TRUE(u.adjacent(2, 4));
  EXPECT_FALSE(u.adjacent(1, 2));
  EXPECT_THROW(direct_product(complete_graph(9), complete_graph(8)), DomainError);
}

TEST(Homomorphisms, Examples) {
  EXPECT_TRUE(is_homomorphism(complete_graph(2), complete_graph(3), {0, 1}));
  EXPECT_FALSE(is_homomorphism(complete_graph(2), complete_graph(3), {0, 0}));
  EXPECT_TRUE(enumerate_homomorphisms(cycle_graph(5), complete_graph(2)).empty());
  EXPECT_EQ(enumerate_homomorphisms(complete_graph(4), complete_graph(4)).size(), 24u);
  // chromatic polynomial of C_5 at 3
  EXPECT_EQ(enumerate_homomorphisms(cycle_graph(5), complete_graph(3)).size(), 30u);
  EXPECT_TRUE(enumerate_homomorphisms(complete_graph(2), complete_graph(1)).empty());
}

TEST(Homomorphisms, BudgetIsResourceError) {
  EXPECT_THROW(enumerate_homomorphisms(empty_graph(12), complete_graph(5), 1000), ResourceError);
}

TEST(Homomorphisms, MatchBruteForceOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 5), 0.5, rng());
    Graph h = random_graph(1 + static_cast<int>(rng() % 4), 0.6, rng());
    if (rng() % 3 == 0) h.add_edge(0, 0);
    const auto fast = enumerate_homomorphisms(g, h);
    const auto slow = oracle::homomorphisms(g, h);
    EXPECT_EQ(fast, slow) << describe(g) << " -> " << describe(h);
    for (const auto& f : fast) EXPECT_TRUE(is_homomorphism(g, h, f));
  }
}

TEST(Colouring, Examples) {
  EXPECT_EQ(chromatic_number(make_family("Kneser:2,5")), 3);
  EXPECT_EQ(chromatic_number(kneser_graph(2, 6)), 4);
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_number(empty_graph(3)), 1);
  EXPECT_EQ(max_independent_set(path_graph(4)), 2);
  EXPECT_EQ(max_independent_set(petersen_graph()), 4);
  EXPECT_EQ(max_independent_set(looped_complete_graph(3)), 0);
  EXPECT_THROW(chromatic_number(q_graph()), DomainError);
}

TEST(Colouring, MatchesBruteForceAndGreedyBound) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 7), 0.45, rng());
    const int chi = chromatic_number(g);
    EXPECT_EQ(chi, oracle::chromatic(g));
    EXPECT_LE(chi, g.max_degree() + 1);
  }
}

TEST(Isomorphism, WitnessIsAnIsomorphism) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(n, 0.4, rng());
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    const auto f = find_isomorphism(g, h);
    ASSERT_TRUE(f.has_value());
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        EXPECT_EQ(g.adjacent(u, v), h.adjacent((*f)[static_cast<std::size_t>(u)], (*f)[static_cast<std::size_t>(v)]));
  }
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  EXPECT_THROW(find_isomorphism(empty_graph(17), empty_graph(17)), ResourceError);
}

TEST(Properties, AdjacencySymmetricAndCommonNeighborsOfSingleton) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 12), 0.3, rng());
    if (rng() % 2) g.add_edge(0, 0);
    for (int u = 0; u < g.order(); ++u) {
      EXPECT_EQ(common_neighbors(g, VertexSet::single(u)), g.neighbors(u));
      for (int v = 0; v < g.order(); ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
  }
}

TEST(Properties, ComplementInvolutions) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 10), 0.5, rng());
    EXPECT_EQ(complement(complement(g, false), false), g);
    Graph looped = g;
    looped.add_edge(0, 0);
    EXPECT_EQ(complement(complement(looped, true), true), looped);
    EXPECT_FALSE(complement(looped, false).has_loops());
  }
}

TEST(Structure, ForestsAndComponents) {
  EXPECT_TRUE(is_forest(path_graph(5)));
  EXPECT_FALSE(is_forest(cycle_graph(4)));
  EXPECT_EQ(component_count(disjoint_union(cycle_graph(3), empty_graph(2))), 3);
  EXPECT_TRUE(is_automorphism(cycle_graph(5), {1, 2, 3, 4, 0}));
  EXPECT_FALSE(is_automorphism(path_graph(3), {1, 0, 2}));
}
