#include <gtest/gtest.h>

#include "wheelramsey/bounds.hpp"
#include "wheelramsey/constructions.hpp"

namespace wheelramsey {
namespace {

TEST(CycleRamseyTest, Table) {
  EXPECT_EQ(cycle_ramsey_diag(3), 5);
  EXPECT_EQ(cycle_ramsey_diag(4), 6);
  EXPECT_EQ(cycle_ramsey_diag(6), 8);
  EXPECT_EQ(cycle_ramsey_diag(7), 13);
  EXPECT_EQ(cycle_ramsey_diag(10), 14);
  EXPECT_THROW(cycle_ramsey_diag(2), std::domain_error);
}

TEST(TreeCompleteTest, Values) {
  EXPECT_EQ(tree_complete_ramsey(2, 2), 2);
  EXPECT_EQ(tree_complete_ramsey(4, 4), 10);
  EXPECT_EQ(tree_complete_ramsey(8 - 2, 5), BigInt((8 - 3) * (5 - 1) + 1));
  EXPECT_THROW(tree_complete_ramsey(1, 3), std::domain_error);
}

TEST(CycleCompleteTest, ValuesAndRecursion) {
  for (int n = 4; n <= 20; ++n) EXPECT_EQ(cycle_complete_upper(n, 2), n - 1);
  EXPECT_EQ(cycle_complete_upper(7, 3), 15);
  // value(m) = value(m-1) + R(P_{n-2}, K_m), exactly.
  for (int n = 4; n <= 15; ++n)
    for (int m = 3; m <= 30; ++m)
      EXPECT_EQ(cycle_complete_upper(n, m), cycle_complete_upper(n, m - 1) + tree_complete_ramsey(n - 2, m));
  EXPECT_THROW(cycle_complete_upper(3, 4), std::domain_error);
  EXPECT_THROW(cycle_complete_upper(5, 1), std::domain_error);
}

TEST(TwoColorTest, Brackets) {
  BoundReport r = two_color_wheel_bounds(8);
  EXPECT_EQ(r.lower, 22);
  EXPECT_EQ(*r.upper, 42);
  EXPECT_EQ(r.lower_tag, bound_tag::kEvenLower);
  r = two_color_wheel_bounds(7);
  EXPECT_EQ(r.lower, 14);
  EXPECT_EQ(*r.upper, 28);
  const BoundReport prior = prior_two_color_wheel_bounds(8);
  EXPECT_EQ(prior.lower, 21);
  EXPECT_EQ(*prior.upper, 54);
  EXPECT_THROW(two_color_wheel_bounds(6), std::domain_error);
}

TEST(TwoColorTest, ImprovesPriorBracket) {
  for (int n = 7; n <= 100; ++n) {
    const BoundReport now = two_color_wheel_bounds(n), before = prior_two_color_wheel_bounds(n);
    EXPECT_LE(now.lower, *now.upper);
    EXPECT_GT(now.lower, before.lower) << n;
    EXPECT_LT(*now.upper, *before.upper) << n;
  }
}

TEST(TwoColorTest, AdvisoryBracketsContainKnownValues) {
  const BoundReport five = two_color_wheel_bounds(5, true);
  EXPECT_TRUE(five.advisory);
  EXPECT_FALSE(five.notes.empty());
  EXPECT_EQ(five.lower, 10);
  EXPECT_EQ(*five.upper, 19);
  const BigInt w5 = known_value("R(W5,W5)").lower;
  EXPECT_TRUE(five.lower <= w5 && w5 <= *five.upper);
  const BoundReport six = two_color_wheel_bounds(6, true);
  EXPECT_EQ(six.lower, 16);
  EXPECT_EQ(*six.upper, 30);
  const BigInt w6 = known_value("R(W6,W6)").lower;
  EXPECT_TRUE(six.lower <= w6 && w6 <= *six.upper);
}

TEST(MulticolorTest, LowerFormula) {
  EXPECT_EQ(k_color_wheel_lower(1, 9), 9);
  EXPECT_EQ(k_color_wheel_lower(2, 8), 22);
  EXPECT_EQ(k_color_wheel_lower(2, 7), 14);
  EXPECT_EQ(k_color_wheel_lower(3, 7), 27);
  EXPECT_EQ(k_color_wheel_lower(3, 8), 64);
  EXPECT_EQ(k_color_wheel_lower(4, 8), 190);
  EXPECT_EQ(k_color_wheel_lower(40, 8), boost::multiprecision::pow(BigInt(3), 39) * 7 + 1);
}

TEST(MulticolorTest, UpperRecursion) {
  EXPECT_EQ(k_color_wheel_upper(1, 8), 8);
  EXPECT_EQ(k_color_wheel_upper(2, 8), 42);
  EXPECT_EQ(k_color_wheel_upper(3, 8), 13040);
  // Grows doubly exponentially; must not overflow.
  EXPECT_GT(k_color_wheel_upper(8, 9), BigInt(1) << 200);
}

TEST(MulticolorTest, StepIsMonotoneInSubstitutedValue) {
  for (int n = 7; n <= 12; ++n)
    for (int k = 2; k <= 5; ++k)
      for (int r = 2; r < 200; ++r) EXPECT_LE(multicolor_upper_step(k, n, r), multicolor_upper_step(k, n, r + 1));
}

TEST(MulticolorTest, LowerBelowUpper) {
  for (int n = 7; n <= 40; ++n)
    for (int k = 2; k <= 5; ++k) EXPECT_LE(k_color_wheel_lower(k, n), k_color_wheel_upper(k, n)) << k << "," << n;
}

TEST(MulticolorTest, CertificateOrdersMatchLowerBound) {
  for (auto [k, n] : {std::pair{2, 8}, {3, 7}, {3, 8}, {4, 8}, {2, 9}, {4, 7}}) {
    const long long order = corollary14_order(k, n);
    EXPECT_EQ(BigInt(order + 1), k_color_wheel_lower(k, n));
    EXPECT_LE(BigInt(order + 1), k_color_wheel_upper(k, n));
  }
}

TEST(BoundReportTest, TagsAndNotes) {
  const BoundReport r = wheel_bound_report(3, 8);
  EXPECT_EQ(r.lower, 64);
  EXPECT_EQ(r.lower_tag, bound_tag::kBlowupEvenLower);
  EXPECT_EQ(r.upper_tag, bound_tag::kRecursiveUpper);
  EXPECT_EQ(*r.upper, 13040);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.front().find("monotone substitution"), std::string::npos);
  EXPECT_EQ(wheel_bound_report(1, 6).lower_tag, bound_tag::kSingleColor);
}

TEST(EpsilonTest, Values) {
  EXPECT_EQ(epsilon_exponent(8), Rational(1, 3));
  EXPECT_EQ(epsilon_exponent(7), Rational(1, 2));
  EXPECT_EQ(epsilon_exponent(6), Rational(1, 2));
  for (int n = 6; n <= 50; ++n) EXPECT_LT(1 + epsilon_exponent(n), 2);
  EXPECT_THROW(epsilon_exponent(3), std::domain_error);
}

TEST(KnownValueTest, Catalog) {
  EXPECT_TRUE(known_value("R(K3,K3)").exact());
  EXPECT_EQ(known_value("R(K4,K4)").lower, 18);
  EXPECT_EQ(known_value("R3(K3)").lower, 17);
  EXPECT_FALSE(known_value("R4(K3)").exact());
  EXPECT_EQ(known_value("R4(K3)").upper, 66);
  EXPECT_THROW(known_value("R(K5,K5)"), std::out_of_range);
  EXPECT_EQ(triangle_wheel_ramsey(8), 15);
}

}  // namespace
}  // namespace wheelramsey
