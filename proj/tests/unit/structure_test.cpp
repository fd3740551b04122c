#include <gtest/gtest.h>

#include <random>

#include "random_instances.hpp"
#include "wheelramsey/detection.hpp"
#include "wheelramsey/oracle.hpp"

namespace wheelramsey {
namespace {

TEST(GirthTest, Examples) {
  EXPECT_EQ(girth(Graph::cycle(5)), 5);
  Graph path(6);
  for (Vertex v = 0; v + 1 < 6; ++v) path.add_edge(v, v + 1);
  EXPECT_EQ(girth(path), std::nullopt);
  Graph tripartite(21);
  for (Vertex u = 0; u < 21; ++u)
    for (Vertex v = u + 1; v < 21; ++v)
      if (u / 7 != v / 7) tripartite.add_edge(u, v);
  EXPECT_EQ(girth(tripartite), 3);
  EXPECT_EQ(girth(petersen_graph()), 5);
}

TEST(CircumferenceTest, Examples) {
  EXPECT_EQ(circumference(Graph::complete(6)).length, 6);
  const Circumference two = circumference(disjoint_union(Graph::complete(3), Graph::complete(3)));
  EXPECT_EQ(two.length, 3);
  EXPECT_TRUE(two.exact);
  EXPECT_EQ(circumference(Graph(4)).length, 0);
  EXPECT_EQ(circumference(petersen_graph()).length, 9);
}

TEST(CircumferenceTest, AboveExactRegimeIsBoundOnly) {
  const Circumference c = circumference(Graph::cycle(40));
  EXPECT_EQ(c.length, 40);
  EXPECT_FALSE(c.exact);
}

TEST(CircumferenceTest, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> order_dist(1, 10);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::random_graph(rng, order_dist(rng), 0.4);
    EXPECT_EQ(circumference(g).length, oracle::circumference(g)) << trial;
    EXPECT_EQ(girth(g), oracle::girth(g)) << trial;
    EXPECT_EQ(cycle_lengths(g), oracle::cycle_lengths(g)) << trial;
  }
}

TEST(PancyclicTest, Examples) {
  EXPECT_TRUE(is_weakly_pancyclic(Graph::complete(5)));
  EXPECT_EQ(cycle_lengths(Graph::complete(5)), (std::vector<int>{3, 4, 5}));
  EXPECT_TRUE(is_weakly_pancyclic(Graph::cycle(6)));
  const Pancyclicity p = weak_pancyclicity(petersen_graph());
  EXPECT_FALSE(p.weakly_pancyclic);
  EXPECT_EQ(p.missing, (std::vector<int>{7}));
  EXPECT_EQ(p.girth, 5);
  EXPECT_EQ(p.circumference, 9);
  EXPECT_EQ(oracle::cycle_lengths(petersen_graph()), (std::vector<int>{5, 6, 8, 9}));
  EXPECT_THROW(weak_pancyclicity(Graph::cycle(33)), std::domain_error);
}

TEST(PancyclicTest, ExactRegimeAboveDpLimit) {
  // Order 30 exercises the per-length search instead of the subset DP.
  Graph g = Graph::cycle(30);
  g.add_edge(0, 15);
  EXPECT_EQ(cycle_lengths(g), (std::vector<int>{16, 30}));
  EXPECT_FALSE(is_weakly_pancyclic(g));
}

// Dense graphs (minimum degree at least (order + 2) / 3) have long cycles and,
// unless bipartite, every length between girth and circumference.
TEST(DenseGraphPropertyTest, CircumferenceAndPancyclicity) {
  std::mt19937_64 rng(8080);
  int non_bipartite = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int order = 9 + trial % 6;
    const Graph g = testing::random_dense_graph(rng, order);
    ASSERT_GE(3 * g.min_degree(), order + 2);
    EXPECT_GE(2 * circumference(g).length, order - 1);
    if (!is_bipartite(g).bipartite()) {
      ++non_bipartite;
      const Pancyclicity p = weak_pancyclicity(g);
      EXPECT_TRUE(p.weakly_pancyclic) << trial;
      ASSERT_TRUE(p.girth);
      EXPECT_LE(*p.girth, 4);
    }
  }
  EXPECT_GT(non_bipartite, 0);
}

}  // namespace
}  // namespace wheelramsey
