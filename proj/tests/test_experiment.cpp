// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qpi/errors.hpp"
#include "qpi/experiment.hpp"

namespace qpi {
namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.n = 16;
  c.t = 4;
  c.h = 2;
  c.trials = 50;
  c.seed = 11;
  c.threads = 1;
  return c;
}

std::string csv_of(const ExperimentConfig& c) {
  std::ostringstream os;
  write_csv(run_experiment(c), os);
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

void expect_invalid(ExperimentConfig c, const std::string& fragment) {
  try {
    c.validate();
    ADD_FAILURE() << "accepted config, expected error mentioning " << fragment;
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(ExperimentConfig, ActionableValidation) {
  auto c = small_config();
  c.t = 3;
  expect_invalid(c, "must divide");
  c = small_config();
  c.n = 24;
  c.t = 3;
  expect_invalid(c, "Sylvester");
  c = small_config();
  c.h = 9;
  expect_invalid(c, "exceeds n/2");
  c = small_config();
  c.trials = 0;
  expect_invalid(c, "trials");
  c = small_config();
  c.x_distribution = "uniform";
  expect_invalid(c, "gaussian");
  c = small_config();
  c.x_norm = -1;
  expect_invalid(c, "x_norm");
}

TEST(ExperimentConfig, JsonFieldsApply) {
  auto c = small_config();
  apply_config_json_text(R"({"n": 64, "t": 8, "h": 4, "trials": 7, "seed": 3, "x_norm": 2.0,
                             "format": "json", "gamma_rule": "lemma", "epsilon": 0.5})",
                         c);
  EXPECT_EQ(c.n, 64u);
  EXPECT_EQ(c.t, 8u);
  EXPECT_EQ(c.trials, 7u);
  EXPECT_EQ(c.format, OutputFormat::kJson);
  EXPECT_EQ(c.rule, GammaRule::kLemmaConsistent);
  EXPECT_EQ(*c.epsilon_for_bounds, 0.5);
}

TEST(ExperimentConfig, JsonErrors) {
  auto c = small_config();
  EXPECT_THROW(apply_config_json_text("{\"bogus\": 1}", c), ParameterError);
  EXPECT_THROW(apply_config_json_text("{\"n\": \"eight\"}", c), ParameterError);
  EXPECT_THROW(apply_config_json_text("[1, 2]", c), ParameterError);
  EXPECT_THROW(apply_config_json_text("{", c), ParameterError);
  EXPECT_THROW(apply_config_json("/nonexistent/qpi.json", c), ParameterError);
}

TEST(RunExperiment, ZeroWeightIsExact) {
  auto c = small_config();
  c.h = 0;
  c.trials = 300;
  const auto r = run_experiment(c);
  for (const auto& row : r.rows) ASSERT_LE(row.abs_error, 1e-9 * std::abs(row.truth) + 1e-9);
  EXPECT_EQ(r.summary.error_bound, 0.0);
  EXPECT_DOUBLE_EQ(r.summary.mi_achieved, 12.0);
}

TEST(RunExperiment, RowsAndSummary) {
  const auto c = small_config();
  const auto r = run_experiment(c);
  ASSERT_EQ(r.rows.size(), 50u);
  double mx = 0.0, total = 0.0;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    EXPECT_EQ(r.rows[i].trial, i);
    EXPECT_EQ(r.rows[i].seed, 11 + i);
    EXPECT_TRUE(r.rows[i].bound_satisfied);
    mx = std::max(mx, r.rows[i].abs_error);
    total += r.rows[i].abs_error;
  }
  EXPECT_EQ(r.summary.max_error, mx);
  EXPECT_DOUBLE_EQ(r.summary.mean_error, total / 50);
  EXPECT_EQ(r.summary.violations, 0u);
  EXPECT_EQ(r.summary.gamma_count, 113);
  EXPECT_NEAR(r.summary.error_bound, 2 * std::sqrt(2 * (1 - 2.0 / 16)), 1e-15);
}

TEST(RunExperiment, IndependentOfThreadCount) {
  auto one = small_config();
  auto many = small_config();
  many.threads = 4;
  EXPECT_EQ(csv_of(one), csv_of(many));
}

TEST(RunExperiment, SameSeedSameBytes) {
  const auto c = small_config();
  EXPECT_EQ(csv_of(c), csv_of(c));
  auto other = c;
  other.seed = 12;
  EXPECT_NE(csv_of(c), csv_of(other));
}

TEST(Csv, SchemaIsStable) {
  const std::string text = csv_of(small_config());
  EXPECT_EQ(text.find('\r'), std::string::npos);
  ASSERT_EQ(text.back(), '\n');
  auto lines = split(text.substr(0, text.size() - 1), '\n');
  ASSERT_EQ(lines.size(), 52u);
  EXPECT_EQ(lines[0],
            "kind,trial,seed,estimate,truth,abs_error,bound,bound_satisfied,max_error,mean_error,violations,"
            "mi_achieved,mi_members,mi_lower,epsilon,gamma_count,gamma_members");
  for (const auto& line : lines) ASSERT_EQ(split(line, ',').size(), 17u) << line;
  EXPECT_EQ(split(lines[1], ',')[0], "trial");
  EXPECT_EQ(split(lines.back(), ',')[0], "summary");
  EXPECT_EQ(split(lines.back(), ',')[15], "113");
}

TEST(Json, SchemaIsStable) {
  std::ostringstream os;
  write_json(run_experiment(small_config()), os);
  const auto j = nlohmann::json::parse(os.str());
  EXPECT_EQ(j.at("trials").size(), 50u);
  for (const char* key : {"trial", "seed", "estimate", "truth", "abs_error", "bound", "bound_satisfied"})
    EXPECT_TRUE(j.at("trials")[0].contains(key)) << key;
  for (const char* key : {"trials", "max_error", "mean_error", "error_bound", "violations", "mi_achieved",
                          "mi_members", "mi_lower", "epsilon", "gamma_count", "gamma_members"})
    EXPECT_TRUE(j.at("summary").contains(key)) << key;
  EXPECT_EQ(j.at("summary").at("gamma_count").get<std::string>(), "113");
}

TEST(Golden, FixedSeedCsv) {
  auto c = small_config();
  c.trials = 5;
  c.seed = 7;
  std::ifstream in(std::string(QPI_GOLDEN_DIR) + "/run_n16_t4_h2_seed7.csv", std::ios::binary);
  ASSERT_TRUE(in) << "missing golden file";
  std::ostringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(csv_of(c), golden.str());
}

}  // namespace
}  // namespace qpi
