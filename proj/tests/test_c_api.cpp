// Exercises the shared library through its C header only.

#include <cmath>
#include <memory>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "ljfix/ljfix.h"

namespace {

struct TableFree {
  void operator()(ljfix_table* t) const { ljfix_table_free(t); }
};
using TablePtr = std::unique_ptr<ljfix_table, TableFree>;

std::string serialize(const ljfix_table* t, ljfix_format f) {
  char* text = nullptr;
  std::size_t n = 0;
  EXPECT_EQ(ljfix_table_serialize(t, f, &text, &n), LJFIX_OK);
  std::string out(text, n);
  ljfix_string_free(text);
  return out;
}

}  // namespace

TEST(CApiTest, PotentialCalls) {
  double v = 0.0;
  ASSERT_EQ(ljfix_evaluate(1.0, 1.0, 1.0, &v), LJFIX_OK);
  EXPECT_EQ(v, 0.0);
  ASSERT_EQ(ljfix_chi_of(1.0, std::pow(2.0, 1.0 / 6.0), &v), LJFIX_OK);
  EXPECT_NEAR(v, 0.5, 1e-15);
  ASSERT_EQ(ljfix_q_of_chi(2.0, 0.5, &v), LJFIX_OK);
  EXPECT_NEAR(v, 2.0 * std::pow(2.0, 1.0 / 6.0), 1e-15);
  EXPECT_EQ(ljfix_f_reduced(0.375), -0.9375);
  ljfix_crossing_pair pair{};
  ASSERT_EQ(ljfix_crossings(1.0, 1.0, -0.5, &pair), LJFIX_OK);
  EXPECT_NEAR(pair.q_left, 1.02674252882830426476, 1e-14);
  EXPECT_NEAR(pair.q_right, 1.37737896567600458578, 1e-14);
}

TEST(CApiTest, ErrorCodes) {
  double v = 0.0;
  EXPECT_EQ(ljfix_evaluate(1.0, 1.0, 0.0, &v), LJFIX_ERR_DOMAIN);
  EXPECT_NE(std::string(ljfix_last_error()), "");
  EXPECT_EQ(ljfix_evaluate(-1.0, 1.0, 1.0, &v), LJFIX_ERR_ARGUMENT);
  EXPECT_EQ(ljfix_evaluate(1.0, 1.0, 1.0, nullptr), LJFIX_ERR_NULL_POINTER);
  ljfix_crossing_pair pair{};
  EXPECT_EQ(ljfix_crossings(1.0, 1.0, 0.0, &pair), LJFIX_ERR_LEVEL_OUT_OF_RANGE);
  EXPECT_NE(std::string(ljfix_last_error()).find("(-1, 0)"), std::string::npos);
  EXPECT_EQ(ljfix_crossings(1.0, 1.0, -1.0, &pair), LJFIX_ERR_DEGENERATE_LEVEL);
  ASSERT_EQ(ljfix_evaluate(1.0, 1.0, 1.0, &v), LJFIX_OK);
  EXPECT_EQ(std::string(ljfix_last_error()), "");
  EXPECT_STREQ(ljfix_status_string(LJFIX_ERR_DOMAIN), "domain error");
}

TEST(CApiTest, Trajectory) {
  ljfix_trajectory* traj = nullptr;
  ASSERT_EQ(ljfix_iterate(0.375, 0.01, 2, LJFIX_MODE_LINEARIZED, &traj), LJFIX_OK);
  ASSERT_EQ(ljfix_trajectory_size(traj), 3u);
  ljfix_step step{};
  ASSERT_EQ(ljfix_trajectory_step(traj, 1, &step), LJFIX_OK);
  EXPECT_EQ(step.index, 1);
  EXPECT_EQ(step.delta, -0.01);
  EXPECT_EQ(ljfix_trajectory_step(traj, 3, &step), LJFIX_ERR_INDEX);
  EXPECT_EQ(ljfix_trajectory_diverged(traj), 0);
  ljfix_trajectory_free(traj);

  EXPECT_EQ(ljfix_iterate(0.5, 0.1, 0, LJFIX_MODE_EXACT, &traj), LJFIX_ERR_ARGUMENT);
  EXPECT_EQ(traj, nullptr);
  ASSERT_EQ(ljfix_iterate(0.2, 0.01, 100, LJFIX_MODE_LINEARIZED, &traj), LJFIX_OK);
  EXPECT_EQ(ljfix_trajectory_diverged(traj), 1);
  ljfix_trajectory_free(traj);
  EXPECT_NEAR(ljfix_step_exact(0.375, 0.01), -0.0096, 1e-15);
  EXPECT_EQ(ljfix_step_linear(0.625, 0.01), 0.01);
}

TEST(CApiTest, FixedPointConstants) {
  ljfix_stability_report r{};
  ASSERT_EQ(ljfix_stability_at(0.3, &r), LJFIX_OK);
  EXPECT_EQ(r.classification, LJFIX_EXPANDING);
  ASSERT_EQ(ljfix_stability_at(0.625, &r), LJFIX_OK);
  EXPECT_EQ(r.classification, LJFIX_MARGINAL);
  ljfix_bifurcation_constants c{};
  ASSERT_EQ(ljfix_bifurcation_constants_get(&c), LJFIX_OK);
  EXPECT_EQ(c.u_c_star, -0.9375);
  EXPECT_EQ(c.deep_point.f, -1.0625);
  ljfix_point pts[2];
  ASSERT_EQ(ljfix_self_similar_points(pts), LJFIX_OK);
  EXPECT_NEAR(pts[0].chi, -0.125, 1e-12);
  EXPECT_NEAR(pts[1].chi, 0.125, 1e-12);
  ljfix_point deep{};
  ASSERT_EQ(ljfix_tangent_intersection(&deep), LJFIX_OK);
  EXPECT_NEAR(deep.f, -1.0625, 1e-12);
}

TEST(CApiTest, CascadeHandle) {
  ljfix_cascade* cascade = nullptr;
  EXPECT_EQ(ljfix_cascade_build(1.0, 1.0, 65, &cascade), LJFIX_ERR_ARGUMENT);
  ASSERT_EQ(ljfix_cascade_build(1.0, 1.0, 8, &cascade), LJFIX_OK);
  ASSERT_EQ(ljfix_cascade_size(cascade), 8u);
  ljfix_cascade_level level{};
  ASSERT_EQ(ljfix_cascade_level_at(cascade, 0, &level), LJFIX_OK);
  EXPECT_EQ(level.has_prev, 0);
  ASSERT_EQ(ljfix_cascade_level_at(cascade, 7, &level), LJFIX_OK);
  EXPECT_EQ(level.order, 8);
  EXPECT_NEAR(level.q_right, 2.13706794391481104489, 1e-14);
  EXPECT_NEAR(level.lindemann, ljfix_lindemann_ratio(), 1e-12);
  int flags[8];
  ASSERT_EQ(ljfix_vacancy_check(cascade, 1.0, flags, 8), LJFIX_OK);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(flags[i], i == 7 ? 1 : 0);
  EXPECT_EQ(ljfix_vacancy_check(cascade, 1.0, flags, 7), LJFIX_ERR_ARGUMENT);
  int m = 0;
  ASSERT_EQ(ljfix_order_count(1.0, &m), LJFIX_OK);
  EXPECT_EQ(m, 8);
  ljfix_energy_ledger ledger{};
  ASSERT_EQ(ljfix_energy_ledger_for(2.0, &ledger), LJFIX_OK);
  EXPECT_EQ(ledger.k_t_c, 16.0);

  ljfix_table* raw = nullptr;
  ASSERT_EQ(ljfix_table_cascade(cascade, 1, &raw), LJFIX_OK);
  TablePtr table(raw);
  EXPECT_EQ(ljfix_table_rows(table.get()), 8u);
  EXPECT_EQ(ljfix_table_columns(table.get()), 7u);
  EXPECT_STREQ(ljfix_table_column_name(table.get(), 6), "vacancy");
  EXPECT_STREQ(ljfix_table_text(table.get(), 7, 6), "true");
  EXPECT_STREQ(ljfix_table_text(table.get(), 0, 4), "");
  double v = 0.0;
  EXPECT_EQ(ljfix_table_number(table.get(), 0, 4, &v), LJFIX_ERR_ARGUMENT);
  ASSERT_EQ(ljfix_table_number(table.get(), 7, 0, &v), LJFIX_OK);
  EXPECT_EQ(v, 8.0);
  EXPECT_EQ(ljfix_table_number(table.get(), 8, 0, &v), LJFIX_ERR_INDEX);
  EXPECT_EQ(ljfix_table_text(table.get(), 8, 0), nullptr);
  ljfix_cascade_free(cascade);
}

TEST(CApiTest, TablesSerialize) {
  ljfix_cascade* cascade = nullptr;
  ASSERT_EQ(ljfix_cascade_build(1.0, 1.0, 8, &cascade), LJFIX_OK);
  ljfix_table* raw = nullptr;
  ASSERT_EQ(ljfix_table_family(cascade, 1.0, 2.0, 5, &raw), LJFIX_OK);
  TablePtr family(raw);
  const auto csv = serialize(family.get(), LJFIX_FORMAT_CSV);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "q,u_1,u_2,u_3,u_4,u_5,u_6,u_7,u_8,envelope");
  EXPECT_EQ(ljfix_table_family(cascade, 2.0, 1.0, 5, &raw), LJFIX_ERR_ARGUMENT);
  ljfix_cascade_free(cascade);

  ASSERT_EQ(ljfix_table_recursion_figure(0.0625, 7, &raw), LJFIX_OK);
  TablePtr fig(raw);
  const auto doc = nlohmann::json::parse(serialize(fig.get(), LJFIX_FORMAT_JSON));
  EXPECT_EQ(doc[3]["f_tent"].get<double>(), -1.0625);

  ASSERT_EQ(ljfix_table_ledger(1.0, 1.0, &raw), LJFIX_OK);
  TablePtr ledger(raw);
  EXPECT_GT(ljfix_table_rows(ledger.get()), 10u);

  int all_passed = 0;
  ASSERT_EQ(ljfix_table_verify(&raw, &all_passed), LJFIX_OK);
  TablePtr verify(raw);
  EXPECT_EQ(all_passed, 1);

  ASSERT_EQ(ljfix_table_potential(1.0, 1.0, 1.0, &raw), LJFIX_OK);
  TablePtr pot(raw);
  EXPECT_EQ(serialize(pot.get(), LJFIX_FORMAT_CSV), "q,chi,u,f\n1,1,0,0\n");
  EXPECT_EQ(ljfix_table_serialize(pot.get(), static_cast<ljfix_format>(9), nullptr, nullptr),
            LJFIX_ERR_NULL_POINTER);
  char* text = nullptr;
  EXPECT_EQ(ljfix_table_serialize(pot.get(), static_cast<ljfix_format>(9), &text, nullptr),
            LJFIX_ERR_ARGUMENT);
}
