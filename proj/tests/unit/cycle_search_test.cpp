#include <gtest/gtest.h>

#include <random>

#include "random_instances.hpp"
#include "wheelramsey/detection.hpp"
#include "wheelramsey/oracle.hpp"

namespace wheelramsey {
namespace {

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

TEST(CycleSearchTest, CompleteGraphHasHamiltonCycle) {
  const auto w = find_cycle_of_length(Graph::complete(5), 5);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(is_valid_cycle(Graph::complete(5), *w, 5));
}

TEST(CycleSearchTest, BipartiteShortcutForOddLength) {
  const CycleSearch s = search_cycle_of_length(complete_bipartite(7, 7), 7);
  EXPECT_FALSE(s.witness);
  EXPECT_EQ(s.method, SearchMethod::BipartiteShortcut);
  const CycleSearch even = search_cycle_of_length(complete_bipartite(7, 7), 8);
  ASSERT_TRUE(even.witness);
  EXPECT_TRUE(is_valid_cycle(complete_bipartite(7, 7), *even.witness, 8));
}

TEST(CycleSearchTest, SizePruneOnForestsAndSmallComponents) {
  Graph tree(6);
  for (Vertex v = 1; v < 6; ++v) tree.add_edge(0, v);
  EXPECT_EQ(search_cycle_of_length(tree, 3).method, SearchMethod::SizePrune);
  const Graph two_triangles = disjoint_union(Graph::complete(3), Graph::complete(3));
  const CycleSearch s = search_cycle_of_length(two_triangles, 4);
  EXPECT_FALSE(s.witness);
  EXPECT_EQ(s.method, SearchMethod::SizePrune);
}

TEST(CycleSearchTest, LargeGraphsUseDfs) {
  const Graph big = disjoint_union(Graph::cycle(30), Graph::complete(4));
  const CycleSearch s = search_cycle_of_length(big, 30);
  ASSERT_TRUE(s.witness);
  EXPECT_EQ(s.method, SearchMethod::PrunedDfs);
  EXPECT_TRUE(is_valid_cycle(big, *s.witness, 30));
  EXPECT_FALSE(find_cycle_of_length(big, 29));
}

TEST(CycleSearchTest, RejectsShortLength) { EXPECT_THROW(find_cycle_of_length(Graph::complete(4), 2), std::domain_error); }

TEST(CycleSearchTest, WitnessIsLexicographicallyLeast) {
  EXPECT_EQ(find_cycle_of_length(Graph::complete(4), 4)->vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  // Without 2-3 the only 4-cycle is 0-2-1-3.
  Graph g = Graph::complete(4);
  g.remove_edge(2, 3);
  const auto w = find_cycle_of_length(g, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vertices, (std::vector<Vertex>{0, 2, 1, 3}));
}

TEST(CycleSearchTest, AgreesWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> order_dist(3, 12);
  std::uniform_real_distribution<double> density(0.15, 0.7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, order_dist(rng), density(rng));
    const std::vector<int> lengths = oracle::cycle_lengths(g);
    for (int len = 3; len <= g.order(); ++len) {
      const auto w = find_cycle_of_length(g, len);
      const bool expected = std::find(lengths.begin(), lengths.end(), len) != lengths.end();
      ASSERT_EQ(w.has_value(), expected) << "trial " << trial << " length " << len;
      if (w) EXPECT_TRUE(is_valid_cycle(g, *w, len));
    }
  }
}

TEST(CycleSearchTest, DfsRegimeAgreesWithOracle) {
  // Connected components just above the subset-DP limit go through the DFS rung.
  std::mt19937_64 rng(7);
  int dfs = 0;
  for (int trial = 0; trial < 20; ++trial) {
    // A long cycle with a few random chords keeps the oracle cheap.
    Graph g = Graph::cycle(kSubsetDpMaxOrder + 4);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int chord = 0; chord < 7; ++chord) {
      const Vertex u = pick(rng), v = pick(rng);
      if (u != v) g.add_edge(u, v);
    }
    const std::vector<int> lengths = oracle::cycle_lengths(g);
    for (int len = 3; len <= g.order(); ++len) {
      const CycleSearch s = search_cycle_of_length(g, len);
      const bool expected = std::find(lengths.begin(), lengths.end(), len) != lengths.end();
      ASSERT_EQ(s.witness.has_value(), expected) << "trial " << trial << " length " << len;
      if (s.witness) EXPECT_TRUE(is_valid_cycle(g, *s.witness, len));
      if (s.method == SearchMethod::PrunedDfs) ++dfs;
    }
  }
  EXPECT_GT(dfs, 0);
}

TEST(CycleSearchTest, BipartiteShortcutIsSoundAgainstOracle) {
  std::mt19937_64 rng(99);
  int shortcuts = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int a = 2 + trial % 5, b = 3 + trial % 4;
    Graph g(a + b);
    std::bernoulli_distribution edge(0.6);
    for (Vertex u = 0; u < a; ++u)
      for (Vertex v = a; v < a + b; ++v)
        if (edge(rng)) g.add_edge(u, v);
    for (int len = 3; len <= g.order(); len += 2) {
      const CycleSearch s = search_cycle_of_length(g, len);
      EXPECT_FALSE(s.witness);
      EXPECT_FALSE(oracle::has_cycle(g, len));
      if (s.method == SearchMethod::BipartiteShortcut) ++shortcuts;
    }
  }
  EXPECT_GT(shortcuts, 0);
}

}  // namespace
}  // namespace wheelramsey
