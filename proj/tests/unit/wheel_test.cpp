#include <gtest/gtest.h>

#include <random>

#include "random_instances.hpp"
#include "wheelramsey/constructions.hpp"
#include "wheelramsey/detection.hpp"
#include "wheelramsey/oracle.hpp"

namespace wheelramsey {
namespace {

TEST(WheelTest, SingleColorCompleteGraph) {
  const auto w = find_mono_wheel(single_color_complete(7), 6, 0);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->center, 0);
  EXPECT_EQ(w->rim, (std::vector<Vertex>{1, 2, 3, 4, 5}));
  EXPECT_TRUE(is_valid_wheel(single_color_complete(7), *w, 6));
  EXPECT_FALSE(find_mono_wheel(single_color_complete(5), 6, 0));
}

TEST(WheelTest, RejectsBadArguments) {
  EXPECT_THROW(find_mono_wheel(single_color_complete(5), 3, 0), std::domain_error);
  EXPECT_THROW(find_mono_wheel(single_color_complete(5), 4, 1), std::domain_error);
}

TEST(WheelTest, LowerConstructionsAreWheelFree) {
  for (int n : {4, 6, 8}) {
    const DetectionReport r = verify_wheel_free(construct_even_lower(n).coloring, n);
    EXPECT_TRUE(r.pass()) << "even n=" << n;
  }
  for (int n : {5, 7}) {
    const DetectionReport r = verify_wheel_free(construct_odd_lower(n).coloring, n);
    EXPECT_TRUE(r.pass()) << "odd n=" << n;
  }
}

TEST(WheelTest, EvenRedClassDischargedByBipartiteShortcut) {
  const WheelSearch red = search_mono_wheel(construct_even_lower(8).coloring, 8, kRed);
  EXPECT_FALSE(red.witness);
  EXPECT_EQ(red.census.at(SearchMethod::BipartiteShortcut), 21);
  const WheelSearch blue = search_mono_wheel(construct_even_lower(8).coloring, 8, kBlue);
  EXPECT_EQ(blue.census.at(SearchMethod::SizePrune), 21);
}

TEST(WheelTest, EvenConstructionContainsSmallerWheels) {
  const EdgeColoring c = construct_even_lower(8).coloring;
  const DetectionReport r = verify_wheel_free(c, 6);
  EXPECT_FALSE(r.pass());
  ASSERT_TRUE(r.results.at(kBlue).witness);
  const auto& w = std::get<WheelWitness>(*r.results.at(kBlue).witness);
  EXPECT_EQ(w.color, kBlue);
  EXPECT_TRUE(is_valid_wheel(c, w, 6));
  EXPECT_TRUE(revalidate(c, r));
  EXPECT_TRUE(result_line(r).starts_with("RESULT: FAIL pattern=wheel(6) order=21 "));
}

TEST(WheelTest, AgreesWithOracleOnRandomColorings) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    const EdgeColoring c = testing::random_coloring(rng, 8, 2);
    for (int n : {5, 6}) {
      for (Color col : {0, 1}) {
        const auto w = find_mono_wheel(c, n, col);
        ASSERT_EQ(w.has_value(), oracle::has_wheel(c, n, col)) << trial << " n=" << n << " c=" << col;
        if (w) EXPECT_TRUE(is_valid_wheel(c, *w, n));
      }
    }
  }
}

TEST(WheelTest, PlantedWheelsAreFound) {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + trial % 4;
    const auto planted = testing::plant_wheel(rng, 16, 3, n);
    ASSERT_TRUE(is_valid_wheel(planted.coloring, planted.planted, n));
    const auto w = find_mono_wheel(planted.coloring, n, planted.planted.color);
    ASSERT_TRUE(w);
    EXPECT_TRUE(is_valid_wheel(planted.coloring, *w, n));
    EXPECT_LE(w->center, planted.planted.center);
  }
}

TEST(WheelTest, ReportIndependentOfThreadCount) {
  const EdgeColoring c = corollary14_family(3, 7).coloring;
  const std::string one = format_report(verify_wheel_free(c, 7, {.threads = 1}));
  EXPECT_EQ(one, format_report(verify_wheel_free(c, 7, {.threads = 3})));
  EXPECT_EQ(one, format_report(verify_wheel_free(c, 7, {.threads = 0})));
  EXPECT_TRUE(one.ends_with("\n"));
}

TEST(PatternTest, ParseAndName) {
  EXPECT_EQ(Pattern::parse("wheel(8)"), Pattern::wheel(8));
  EXPECT_EQ(Pattern::parse("k4-"), Pattern::k4_minus());
  EXPECT_EQ(Pattern::parse("cycle(5)").name(), "cycle(5)");
  EXPECT_EQ(Pattern::parse("triangle"), Pattern::triangle());
  EXPECT_EQ(Pattern::parse("clique(4)"), Pattern::clique(4));
  EXPECT_THROW(Pattern::parse("wheel(x)"), std::invalid_argument);
  EXPECT_THROW(Pattern::parse("square"), std::invalid_argument);
}

TEST(PatternTest, BaseColoringsAvoidTheirPatterns) {
  EXPECT_TRUE(verify_pattern_free(paley5().coloring, Pattern::triangle()).pass());
  EXPECT_TRUE(verify_pattern_free(rook9().coloring, Pattern::k4_minus()).pass());
  // rook9 does have triangles (each row) in color 0.
  const auto tri = find_mono_pattern(rook9().coloring, Pattern::triangle(), 0);
  ASSERT_TRUE(tri);
  EXPECT_EQ(tri->vertices, (std::vector<Vertex>{0, 1, 2}));
}

TEST(PatternTest, SingleColorK4HasK4Minus) {
  const auto w = find_mono_pattern(single_color_complete(4), Pattern::k4_minus(), 0);
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_valid_subset_witness(single_color_complete(4), Pattern::k4_minus(), *w));
}

TEST(PatternTest, AgreesWithOracleCounts) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const EdgeColoring c = testing::random_coloring(rng, 9, 2);
    for (Color col : {0, 1}) {
      EXPECT_EQ(find_mono_pattern(c, Pattern::triangle(), col).has_value(), oracle::triangle_count(c, col) > 0);
      EXPECT_EQ(find_mono_pattern(c, Pattern::k4_minus(), col).has_value(), oracle::k4_minus_count(c, col) > 0);
      EXPECT_EQ(find_mono_pattern(c, Pattern::clique(4), col).has_value(),
                oracle::dense_subset_count(c, 4, 0, col) > 0);
    }
  }
}

TEST(ReportTest, FormatsAreStable) {
  const DetectionReport r = verify_wheel_free(construct_odd_lower(5).coloring, 5);
  EXPECT_EQ(format_report(r), format_report(r, parse_report_format("text")));
  const std::string csv = format_report(r, ReportFormat::Csv);
  EXPECT_TRUE(csv.starts_with("pattern,order,color,status,witness,method_census\n"));
  const std::string jl = format_report(r, ReportFormat::JsonLines);
  EXPECT_EQ(std::count(jl.begin(), jl.end(), '\n'), 3);
  EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
  EXPECT_EQ(format_census({}), "none");
}

}  // namespace
}  // namespace wheelramsey
