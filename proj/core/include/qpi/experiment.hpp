// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

// Monte Carlo runner: many independent sessions on random (w, x), checked
// against the worst-case error bound.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qpi/combinatorics.hpp"
#include "qpi/gamma.hpp"

namespace qpi {

enum class OutputFormat { kCsv, kJson };

struct ExperimentConfig {
  std::size_t n = 16;
  std::size_t t = 4;
  std::size_t h = 1;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  double x_norm = 1.0;
  std::string x_distribution = "gaussian";
  /// eps for the linear-decoding lower bound; defaults to the scheme's own
  /// worst-case error 2 sqrt(h (1 - h/n)).
  std::optional<double> epsilon_for_bounds;
  std::optional<std::filesystem::path> output_path;
  OutputFormat format = OutputFormat::kCsv;
  std::optional<std::filesystem::path> hadamard_path;
  GammaRule rule = GammaRule::kAtMostH;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;

  /// Throws ParameterError with a message naming the offending field.
  void validate() const;
};

/// Reads a JSON object with the same field names as the CLI flags
/// (n, t, h, trials, seed, x_norm, x_distribution, epsilon, out, format,
/// hadamard, gamma_rule, threads) into `cfg`, leaving absent fields alone.
void apply_config_json(const std::filesystem::path& path, ExperimentConfig& cfg);
void apply_config_json_text(const std::string& text, ExperimentConfig& cfg);

struct TrialRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  double truth = 0.0;
  double abs_error = 0.0;
  double bound = 0.0;
  bool bound_satisfied = true;
};

struct ExperimentSummary {
  std::size_t trials = 0;
  double max_error = 0.0;
  double mean_error = 0.0;
  double error_bound = 0.0;
  std::size_t violations = 0;
  double mi_achieved = 0.0;
  double mi_members = 0.0;
  double mi_lower = 0.0;
  double epsilon = 0.0;
  BigInt gamma_count;
  BigInt gamma_members;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialRow> rows;  // sorted by trial index
  ExperimentSummary summary;
};

/// Slack allowed on top of the bound for floating-point rounding.
double bound_slack(double truth);

ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Columns: kind,trial,seed,estimate,truth,abs_error,bound,bound_satisfied,
/// max_error,mean_error,violations,mi_achieved,mi_members,mi_lower,epsilon,
/// gamma_count,gamma_members. One "trial" row per session, then one "summary"
/// row whose bound and bound_satisfied hold the error bound and whether no
/// trial violated it. Cells that do not apply to a row kind are empty.
void write_csv(const ExperimentResult& result, std::ostream& out);
void write_json(const ExperimentResult& result, std::ostream& out);
void write_result(const ExperimentResult& result, std::ostream& out);

}  // namespace qpi
