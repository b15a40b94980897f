// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpi/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "qpi/bounds.hpp"
#include "qpi/errors.hpp"
#include "qpi/hadamard.hpp"
#include "qpi/scheme.hpp"
#include "qpi/scheme_approx.hpp"
#include "qpi/transcript_io.hpp"

namespace qpi {
namespace {

using json = nlohmann::ordered_json;

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

template <typename T>
T get_field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParameterError(std::string("config: field '") + key + "' has the wrong type (" + e.what() + ")");
  }
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw ParameterError("config: format must be 'csv' or 'json', got '" + s + "'");
}

}  // namespace

void ExperimentConfig::validate() const {
  auto fail = [&](const std::string& msg) { throw ParameterError("config: " + msg); };
  if (n == 0) fail("n must be positive");
  if (t == 0) fail("t must be positive");
  if (n % t != 0) fail("t=" + std::to_string(t) + " must divide n=" + std::to_string(n));
  if (!hadamard_path && (!is_power_of_two(t) || t > (std::size_t{1} << kMaxSylvesterExponent))) {
    fail("t=" + std::to_string(t) + " is not a Sylvester order (power of two up to 2^" +
         std::to_string(kMaxSylvesterExponent) + "); pass a Hadamard matrix file for other orders");
  }
  if (2 * h > n) fail("h=" + std::to_string(h) + " exceeds n/2=" + std::to_string(n / 2));
  if (trials == 0) fail("trials must be positive");
  if (!(x_norm > 0.0) || !std::isfinite(x_norm)) fail("x_norm must be a positive finite number");
  if (x_distribution != "gaussian") fail("x_distribution must be 'gaussian', got '" + x_distribution + "'");
  if (epsilon_for_bounds && (!(*epsilon_for_bounds >= 0.0) || !std::isfinite(*epsilon_for_bounds))) {
    fail("epsilon must be a non-negative finite number");
  }
}

void apply_config_json_text(const std::string& text, ExperimentConfig& cfg) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("config: top level must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "n") {
      cfg.n = get_field<std::size_t>(j, "n");
    } else if (key == "t") {
      cfg.t = get_field<std::size_t>(j, "t");
    } else if (key == "h") {
      cfg.h = get_field<std::size_t>(j, "h");
    } else if (key == "trials") {
      cfg.trials = get_field<std::size_t>(j, "trials");
    } else if (key == "seed") {
      cfg.seed = get_field<std::uint64_t>(j, "seed");
    } else if (key == "x_norm") {
      cfg.x_norm = get_field<double>(j, "x_norm");
    } else if (key == "x_distribution") {
      cfg.x_distribution = get_field<std::string>(j, "x_distribution");
    } else if (key == "epsilon") {
      cfg.epsilon_for_bounds = get_field<double>(j, "epsilon");
    } else if (key == "out") {
      cfg.output_path = get_field<std::string>(j, "out");
    } else if (key == "format") {
      cfg.format = parse_format(get_field<std::string>(j, "format"));
    } else if (key == "hadamard") {
      cfg.hadamard_path = get_field<std::string>(j, "hadamard");
    } else if (key == "gamma_rule") {
      cfg.rule = parse_gamma_rule(get_field<std::string>(j, "gamma_rule"));
    } else if (key == "threads") {
      cfg.threads = get_field<std::size_t>(j, "threads");
    } else {
      throw ParameterError("config: unknown field '" + key + "'");
    }
  }
}

void apply_config_json(const std::filesystem::path& path, ExperimentConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("config: cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  apply_config_json_text(ss.str(), cfg);
}

double bound_slack(double truth) { return 1e-9 * (1.0 + std::abs(truth)); }

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  SchemeParams params{cfg.n, cfg.t, cfg.h, std::nullopt, cfg.rule};
  if (cfg.hadamard_path) params.hadamard = load_hadamard(*cfg.hadamard_path);
  const Scheme scheme(params);

  ExperimentResult result;
  result.config = cfg;
  result.rows.resize(cfg.trials);

  std::size_t workers = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, cfg.trials);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < cfg.trials; i = next++) {
        const std::uint64_t seed = cfg.seed + i;
        auto rng = data_rng(seed);
        const SignVector w = random_sign_vector(cfg.n, rng);
        const std::vector<double> x = random_data_vector(cfg.n, cfg.x_norm, rng);
        const Transcript tr = run_session(scheme, w, x, seed, SessionMode::kTest);
        TrialRow& row = result.rows[i];
        row.trial = i;
        row.seed = seed;
        row.estimate = tr.estimate;
        row.truth = *tr.truth;
        row.abs_error = std::abs(tr.estimate - row.truth);
        row.bound = *tr.bound;
        row.bound_satisfied = row.abs_error <= row.bound + bound_slack(row.truth);
      }
    } catch (...) {
      const std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = cfg.trials;
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentSummary& s = result.summary;
  s.trials = cfg.trials;
  double total = 0.0;
  for (const auto& row : result.rows) {
    s.max_error = std::max(s.max_error, row.abs_error);
    total += row.abs_error;
    if (!row.bound_satisfied) ++s.violations;
  }
  s.mean_error = total / static_cast<double>(cfg.trials);
  s.error_bound = error_bound(cfg.h, cfg.n, cfg.x_norm);
  const GammaSpec& spec = scheme.gamma_spec();
  s.gamma_count = count_gamma(spec);
  s.gamma_members = scheme.gamma_sampler().member_count();
  s.mi_achieved = mi_achieved(cfg.n, cfg.t, cfg.h);
  s.mi_members = mi_of_members(spec);
  s.epsilon = cfg.epsilon_for_bounds.value_or(error_bound(cfg.h, cfg.n, 1.0));
  s.mi_lower = mi_lower(cfg.n, cfg.t, s.epsilon).bits;
  return result;
}

void write_csv(const ExperimentResult& result, std::ostream& out) {
  out << "kind,trial,seed,estimate,truth,abs_error,bound,bound_satisfied,"
         "max_error,mean_error,violations,mi_achieved,mi_members,mi_lower,epsilon,gamma_count,gamma_members\n";
  for (const auto& r : result.rows) {
    out << "trial," << r.trial << ',' << r.seed << ',' << format_double(r.estimate) << ','
        << format_double(r.truth) << ',' << format_double(r.abs_error) << ',' << format_double(r.bound) << ','
        << (r.bound_satisfied ? "true" : "false") << ",,,,,,,,,\n";
  }
  const auto& s = result.summary;
  out << "summary,,,,,,"
      << format_double(s.error_bound) << ',' << (s.violations == 0 ? "true" : "false") << ','
      << format_double(s.max_error) << ',' << format_double(s.mean_error) << ',' << s.violations << ','
      << format_double(s.mi_achieved) << ',' << format_double(s.mi_members) << ','
      << format_double(s.mi_lower) << ',' << format_double(s.epsilon) << ',' << to_string(s.gamma_count) << ','
      << to_string(s.gamma_members) << '\n';
}

void write_json(const ExperimentResult& result, std::ostream& out) {
  const auto& c = result.config;
  const auto& s = result.summary;
  json j;
  j["config"] = {{"n", c.n},
                 {"t", c.t},
                 {"h", c.h},
                 {"trials", c.trials},
                 {"seed", c.seed},
                 {"x_norm", c.x_norm},
                 {"x_distribution", c.x_distribution},
                 {"gamma_rule", to_string(c.rule)}};
  json rows = json::array();
  for (const auto& r : result.rows) {
    rows.push_back({{"trial", r.trial},
                    {"seed", r.seed},
                    {"estimate", r.estimate},
                    {"truth", r.truth},
                    {"abs_error", r.abs_error},
                    {"bound", r.bound},
                    {"bound_satisfied", r.bound_satisfied}});
  }
  j["trials"] = std::move(rows);
  j["summary"] = {{"trials", s.trials},
                  {"max_error", s.max_error},
                  {"mean_error", s.mean_error},
                  {"error_bound", s.error_bound},
                  {"violations", s.violations},
                  {"mi_achieved", s.mi_achieved},
                  {"mi_members", s.mi_members},
                  {"mi_lower", s.mi_lower},
                  {"epsilon", s.epsilon},
                  {"gamma_count", to_string(s.gamma_count)},
                  {"gamma_members", to_string(s.gamma_members)}};
  out << j.dump(2) << '\n';
}

void write_result(const ExperimentResult& result, std::ostream& out) {
  if (result.config.format == OutputFormat::kJson) {
    write_json(result, out);
  } else {
    write_csv(result, out);
  }
}

}  // namespace qpi
