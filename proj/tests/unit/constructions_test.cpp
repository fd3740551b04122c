#include <gtest/gtest.h>

#include "wheelramsey/constructions.hpp"
#include "wheelramsey/detection.hpp"
#include "wheelramsey/oracle.hpp"

namespace wheelramsey {
namespace {

std::vector<Vertex> red_neighbors(const EdgeColoring& c, Vertex v) {
  return color_class(c, kRed).neighborhood(v).to_vector();
}

std::vector<Vertex> range(Vertex first, int size) {
  std::vector<Vertex> out;
  for (int i = 0; i < size; ++i) out.push_back(first + i);
  return out;
}

TEST(EvenLowerTest, OrderAndDegrees) {
  const Construction c = construct_even_lower(8);
  EXPECT_EQ(c.coloring.order(), 21);
  EXPECT_EQ(c.coloring.num_colors(), 2);
  const Graph red = color_class(c.coloring, kRed), blue = color_class(c.coloring, kBlue);
  for (Vertex v = 0; v < 21; ++v) {
    EXPECT_EQ(blue.degree(v), 6);
    EXPECT_EQ(red.degree(v), 14);
  }
  EXPECT_EQ(c.blocks.total(), 21);
  EXPECT_EQ(c.blocks.part("B").first, 7);
}

TEST(EvenLowerTest, ClassesAreCliquesAndTripartite) {
  for (int n : {4, 6, 8, 10, 12}) {
    const Construction c = construct_even_lower(n);
    const int part = n - 1;
    const Graph blue = color_class(c.coloring, kBlue);
    EXPECT_EQ(blue.edge_count(), static_cast<std::size_t>(3 * part * (part - 1) / 2));
    for (Vertex u = 0; u < 3 * part; ++u)
      for (Vertex v = u + 1; v < 3 * part; ++v)
        EXPECT_EQ(c.coloring.color(u, v), u / part == v / part ? kBlue : kRed);
  }
  const Graph red4 = color_class(construct_even_lower(4).coloring, kRed);
  EXPECT_EQ(red4.order(), 9);
  EXPECT_EQ(red4.edge_count(), 27u);
}

TEST(EvenLowerTest, RejectsBadN) {
  EXPECT_THROW(construct_even_lower(7), std::domain_error);
  EXPECT_THROW(construct_even_lower(2), std::domain_error);
}

TEST(OddLowerTest, PartsAndNeighborhoods) {
  const Construction c = construct_odd_lower(7);
  EXPECT_EQ(c.coloring.order(), 13);
  const auto& b = c.blocks;
  for (const char* label : {"A", "B", "C", "D"}) EXPECT_EQ(b.part(label).size, 3);
  const Vertex v0 = b.special.at(0).second;
  EXPECT_EQ(v0, 12);

  auto set_of = [&](std::initializer_list<const char*> labels, std::vector<Vertex> extra = {}) {
    std::vector<Vertex> out = std::move(extra);
    for (const char* l : labels) {
      auto r = range(b.part(l).first, b.part(l).size);
      out.insert(out.end(), r.begin(), r.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  EXPECT_EQ(red_neighbors(c.coloring, v0), set_of({"B", "D"}));
  EXPECT_EQ(red_neighbors(c.coloring, v0).size(), 6u);
  for (Vertex v : range(b.part("A").first, 3)) EXPECT_EQ(red_neighbors(c.coloring, v), set_of({"C", "D"}));
  for (Vertex v : range(b.part("B").first, 3)) {
    std::vector<Vertex> expected = set_of({"B", "C"}, {v0});
    expected.erase(std::find(expected.begin(), expected.end(), v));
    EXPECT_EQ(red_neighbors(c.coloring, v), expected);
  }
}

TEST(OddLowerTest, MinimumN) {
  const Construction c = construct_odd_lower(5);
  EXPECT_EQ(c.coloring.order(), 9);
  EXPECT_EQ(c.blocks.part("D").size, 2);
  EXPECT_THROW(construct_odd_lower(3), std::domain_error);
  EXPECT_THROW(construct_odd_lower(8), std::domain_error);
}

TEST(OddLowerTest, ColorSwapIsAnIsomorphism) {
  // A -> B -> C -> D -> A with v0 fixed maps blue onto red.
  for (int n : {5, 7, 9, 11}) {
    const Construction c = construct_odd_lower(n);
    const int h = (n - 1) / 2;
    std::vector<Vertex> perm(static_cast<std::size_t>(2 * n - 1));
    for (Vertex v = 0; v < 4 * h; ++v) perm[v] = (v + h) % (4 * h);
    perm[4 * h] = 4 * h;
    EXPECT_EQ(permute_vertices(c.coloring, perm), swap_red_blue(c.coloring)) << "n=" << n;
  }
}

TEST(BaseColoringTest, Paley5) {
  const BaseColoring p = paley5();
  EXPECT_EQ(p.forbidden, ForbiddenPattern::Triangle);
  EXPECT_EQ(color_class(p.coloring, 0), Graph::cycle(5));
  EXPECT_EQ(girth(color_class(p.coloring, 0)), 5);
  EXPECT_EQ(oracle::triangle_count(p.coloring, 0), 0u);
  EXPECT_EQ(oracle::triangle_count(p.coloring, 1), 0u);
}

TEST(BaseColoringTest, Rook9) {
  const BaseColoring r = rook9();
  EXPECT_EQ(r.forbidden, ForbiddenPattern::K4Minus);
  const Graph rook = color_class(r.coloring, 0);
  EXPECT_EQ(rook.edge_count(), 18u);
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(rook.degree(v), 4);
  EXPECT_EQ(oracle::k4_minus_count(r.coloring, 0), 0u);
  EXPECT_EQ(oracle::k4_minus_count(r.coloring, 1), 0u);
  // The complement is the 3x3 torus-like "transversal" graph, also 4-regular.
  EXPECT_EQ(color_class(r.coloring, 1).edge_count(), 18u);
}

TEST(BlowupTest, InvariantsHold) {
  const BaseColoring base = paley5();
  const Construction inner = construct_odd_lower(5);
  const Construction up = blowup(base.coloring, inner);
  const int t = inner.coloring.order();
  ASSERT_EQ(up.coloring.order(), 5 * t);
  EXPECT_EQ(up.coloring.num_colors(), 4);
  for (Vertex x = 0; x < up.coloring.order(); ++x) {
    for (Vertex y = x + 1; y < up.coloring.order(); ++y) {
      const Color c = up.coloring.color(x, y);
      if (x / t == y / t) {
        EXPECT_GE(c, 2);
        EXPECT_EQ(c - 2, inner.coloring.color(x % t, y % t));
      } else {
        EXPECT_LT(c, 2);
        EXPECT_EQ(c, base.coloring.color(x / t, y / t));
      }
    }
  }
  EXPECT_EQ(up.blocks.parts.size(), 5u);
  EXPECT_EQ(up.blocks.total(), up.coloring.order());
}

TEST(BlowupTest, SingleVertexBlocksReproduceBase) {
  const BaseColoring base = paley5();
  const Construction up = blowup(base.coloring, single_color_complete(1));
  ASSERT_EQ(up.coloring.order(), 5);
  EXPECT_TRUE(std::equal(up.coloring.pair_colors().begin(), up.coloring.pair_colors().end(),
                         base.coloring.pair_colors().begin()));
}

TEST(BlowupTest, RejectsDegenerateBase) {
  EXPECT_THROW(blowup(single_color_complete(1), single_color_complete(3)), std::domain_error);
}

TEST(IteratedBlowupTest, Orders) {
  EXPECT_EQ(corollary14_family(2, 8).coloring, construct_even_lower(8).coloring);
  EXPECT_EQ(corollary14_family(3, 7).coloring.order(), 26);
  EXPECT_EQ(corollary14_family(3, 8).coloring.order(), 63);
  EXPECT_EQ(corollary14_order(4, 8), 189);
  EXPECT_EQ(corollary14_family(4, 8).coloring.num_colors(), 4);
  EXPECT_THROW(corollary14_family(1, 8), std::domain_error);
  EXPECT_THROW(corollary14_family(3, 3), std::domain_error);
}

TEST(IteratedBlowupTest, BaseColorNeighborhoodsAreBipartite) {
  // With a K4- free base and even n, every base-color neighborhood graph is bipartite.
  const Construction fam = corollary14_family(4, 8);
  for (Color c : {0, 1}) {
    const Graph klass = color_class(fam.coloring, c);
    for (Vertex v = 0; v < fam.coloring.order(); v += 7) {
      const InducedSubgraph local = induced_subgraph(klass, klass.neighborhood(v));
      EXPECT_TRUE(is_bipartite(local.graph).bipartite()) << "color " << c << " vertex " << v;
    }
  }
  const Construction rich = blowup(rook9().coloring, construct_even_lower(6));
  for (Color c : {0, 1}) {
    const Graph klass = color_class(rich.coloring, c);
    for (Vertex v = 0; v < rich.coloring.order(); ++v) {
      EXPECT_TRUE(is_bipartite(induced_subgraph(klass, klass.neighborhood(v)).graph).bipartite());
    }
  }
}

}  // namespace
}  // namespace wheelramsey
