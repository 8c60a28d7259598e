#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ljfix/cascade.hpp"
#include "ljfix/error.hpp"
#include "oracles.hpp"

using namespace ljfix;
using ljfix::testing::rel_err;

namespace {

// mpmath, 30 digits
constexpr double kSigma2 = 1.08886688878700301950;  // (5/3)^(1/6)
constexpr double kQ2Right = 1.28224076634888662694; // (40/9)^(1/6)
constexpr double kSigma8 = 1.81477814797833836584;
constexpr double kQ8Right = 2.13706794391481104489;
constexpr double kQ7Right = 1.96265307166746827483;
constexpr double kQ9Right = 2.32698252321695776430;
constexpr double kLindemann = 0.104648923348405662036;

}  // namespace

TEST(BuildTest, FirstTwoOrders) {
  const auto levels = build_cascade(1.0, 1.0, 2);
  ASSERT_EQ(levels.size(), 2u);
  EXPECT_EQ(levels[0].order, 1);
  EXPECT_EQ(levels[0].sigma(), 1.0);
  EXPECT_LT(rel_err(levels[0].q_left, 1.08148374712019894793), 1e-15);
  EXPECT_LT(rel_err(levels[0].q_right, 1.17759184300048096490), 1e-15);
  EXPECT_FALSE(levels[0].gap_prev.has_value());
  EXPECT_FALSE(levels[0].lindemann.has_value());
  EXPECT_LT(rel_err(levels[1].sigma(), kSigma2), 1e-15);
  EXPECT_LT(rel_err(levels[1].q_left, levels[0].q_right), 1e-15);
  EXPECT_LT(rel_err(levels[1].q_right, kQ2Right), 1e-15);
  ASSERT_TRUE(levels[1].lindemann.has_value());
  EXPECT_LT(rel_err(*levels[1].lindemann, kLindemann), 1e-13);
}

TEST(BuildTest, EighthOrder) {
  const auto levels = build_cascade(1.0, 1.0, 8);
  EXPECT_LT(rel_err(levels[7].sigma(), kSigma8), 1e-14);
  EXPECT_LT(rel_err(levels[7].q_right, kQ8Right), 1e-14);
  EXPECT_LT(rel_err(levels[6].q_right, kQ7Right), 1e-14);
}

TEST(BuildTest, ScalesWithSigma) {
  const auto unit = build_cascade(1.0, 1.0, 1);
  const auto doubled = build_cascade(2.0, 1.0, 1);
  EXPECT_EQ(doubled[0].q_left, 2.0 * unit[0].q_left);
  EXPECT_EQ(doubled[0].q_right, 2.0 * unit[0].q_right);
}

TEST(BuildTest, RejectsBadArguments) {
  EXPECT_THROW(build_cascade(0.0, 1.0, 8), ArgumentError);
  EXPECT_THROW(build_cascade(1.0, -1.0, 8), ArgumentError);
  EXPECT_THROW(build_cascade(1.0, 1.0, 0), ArgumentError);
  EXPECT_THROW(build_cascade(1.0, 1.0, 65), ArgumentError);
  EXPECT_NO_THROW(build_cascade(1.0, 1.0, 64));
}

TEST(CascadeProperty, GeometryAndSharpAngles) {
  const double sigma1 = 0.34;
  const double eps1 = 1.7;
  const auto levels = build_cascade(sigma1, eps1, 16);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& l = levels[i];
    EXPECT_LT(rel_err(l.sigma(), sigma1 * std::pow(5.0 / 3.0, i / 6.0)), 1e-12);
    EXPECT_LT(rel_err(l.q_right, l.sigma() * std::pow(8.0 / 3.0, 1.0 / 6.0)), 1e-12);
    EXPECT_LT(rel_err(l.q_left, l.sigma() * std::pow(8.0 / 5.0, 1.0 / 6.0)), 1e-12);
    EXPECT_EQ(l.spec.epsilon(), eps1);
    EXPECT_NEAR(chi_of(l.spec, l.q_right), 0.375, 1e-12);
    EXPECT_NEAR(chi_of(l.spec, l.q_left), 0.625, 1e-12);
    if (i + 1 < levels.size()) {
      const auto& next = levels[i + 1];
      EXPECT_NEAR(next.sigma() / l.sigma(), std::pow(5.0 / 3.0, 1.0 / 6.0), 1e-12);
      EXPECT_LE(std::abs(next.q_left - l.q_right), 1e-12 * sigma1);
      // both curves sit at the fixed-point level at the shared point
      EXPECT_LT(rel_err(evaluate(l.spec, l.q_right), -15.0 / 16.0 * eps1), 1e-12);
      EXPECT_LT(rel_err(evaluate(next.spec, l.q_right), -15.0 / 16.0 * eps1), 1e-12);
      EXPECT_LT(rel_err(*next.lindemann, lindemann_ratio()), 1e-12);
    }
  }
}

TEST(CascadeProperty, RadiiMatchCrossingsSolver) {
  const auto levels = build_cascade(1.0, 1.0, 8);
  for (const auto& l : levels) {
    const auto oracle = ljfix::testing::bisect_crossings(l.sigma(), 1.0, -15.0 / 16.0);
    EXPECT_LT(rel_err(l.q_left, oracle.left), 1e-10);
    EXPECT_LT(rel_err(l.q_right, oracle.right), 1e-10);
    const auto pair = crossings(l.spec, -15.0 / 16.0);
    EXPECT_LT(rel_err(l.q_left, pair.q_left), 1e-10);
    EXPECT_LT(rel_err(l.q_right, pair.q_right), 1e-10);
  }
}

TEST(LindemannTest, ClosedForm) {
  EXPECT_LT(rel_err(lindemann_ratio(), kLindemann), 1e-14);
  EXPECT_LT(std::abs(lindemann_ratio() - 0.1047), 2e-4);
  const auto levels = build_cascade(1.0, 1.0, 8);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    EXPECT_NEAR(*levels[i].lindemann, lindemann_ratio(), 1e-12);
  }
}

TEST(OrderCountTest, AlwaysEight) {
  EXPECT_EQ(order_count(1.0), 8);
  EXPECT_EQ(order_count(3.4), 8);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(0.1, 100.0);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(order_count(dist(rng)), 8);
  EXPECT_THROW(order_count(0.0), ArgumentError);
}

TEST(VacancyTest, OnlyEighthAndBeyond) {
  const auto eight = vacancy_check(build_cascade(1.0, 1.0, 8), 1.0);
  EXPECT_EQ(eight, (std::vector<bool>{false, false, false, false, false, false, false, true}));
  EXPECT_EQ(vacancy_check(build_cascade(1.0, 1.0, 1), 1.0), std::vector<bool>{false});
  const auto nine_levels = build_cascade(1.0, 1.0, 9);
  EXPECT_LT(rel_err(nine_levels[8].q_right, kQ9Right), 1e-14);
  const auto nine = vacancy_check(nine_levels, 1.0);
  EXPECT_TRUE(nine[7]);
  EXPECT_TRUE(nine[8]);
  EXPECT_THROW(vacancy_check({}, 1.0), ArgumentError);
}

TEST(EnergyLedgerTest, ConstantsAndScaling) {
  const auto one = energy_ledger(1.0);
  EXPECT_EQ(one.u_c_star, -0.9375);
  EXPECT_EQ(one.deep_attractive, -1.0625);
  EXPECT_EQ(one.qiee, 0.125);
  EXPECT_NEAR(one.e_c, 6.6666667, 1e-7);
  EXPECT_EQ(one.k_t_c, 8.0);
  EXPECT_EQ(one.deep_attractive - one.u_c_star, -one.qiee);
  EXPECT_LT(one.e_c, one.k_t_c);
  const auto two = energy_ledger(2.0);
  EXPECT_EQ(two.u_c_star, 2 * one.u_c_star);
  EXPECT_EQ(two.deep_attractive, 2 * one.deep_attractive);
  EXPECT_EQ(two.qiee, 2 * one.qiee);
  EXPECT_EQ(two.e_c, 2 * one.e_c);
  EXPECT_EQ(two.k_t_c, 2 * one.k_t_c);
  EXPECT_THROW(energy_ledger(0.0), ArgumentError);
}
