// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qpi/bounds.hpp"
#include "qpi/errors.hpp"
#include "qpi/experiment.hpp"
#include "qpi/gamma.hpp"
#include "qpi/hadamard.hpp"
#include "qpi/oracles.hpp"
#include "qpi/scheme.hpp"
#include "qpi/scheme_approx.hpp"
#include "qpi/transcript_io.hpp"
#include "qpi/verify.hpp"
#include "qpi/wire.hpp"

namespace qpi::cli {
namespace {

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string sign_string(const SignVector& v) {
  std::string s(v.size(), '+');
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v.bit(j)) s[j] = '-';
  }
  return s;
}

GammaRule rule_from(const std::string& name) { return parse_gamma_rule(name); }

struct RunOptions {
  std::string config;
  std::size_t n = 0, t = 0, h = 0, trials = 0, threads = 0;
  std::uint64_t seed = 0;
  double x_norm = 0.0, epsilon = 0.0;
  std::string out, format, hadamard, rule;
};

struct GammaOptions {
  std::size_t n = 12, t = 4, h = 1;
  bool enumerate = false;
  bool list = false;
};

struct BoundsOptions {
  std::size_t n = 8, t = 2, h = 1, ell = 0;
  double epsilon = -1.0;
  bool json = false;
  bool table = false;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
};

struct SessionOptions {
  std::size_t n = 16, t = 4, h = 1;
  std::uint64_t seed = 1;
  double x_norm = 1.0;
  bool hex = false;
  std::string rule = "at-most-h";
  std::string hadamard;
};

int cmd_run(const RunOptions& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  if (!o.config.empty()) apply_config_json(o.config, cfg);
  if (sub.count("--n")) cfg.n = o.n;
  if (sub.count("--t")) cfg.t = o.t;
  if (sub.count("--h")) cfg.h = o.h;
  if (sub.count("--trials")) cfg.trials = o.trials;
  if (sub.count("--seed")) cfg.seed = o.seed;
  if (sub.count("--x-norm")) cfg.x_norm = o.x_norm;
  if (sub.count("--epsilon")) cfg.epsilon_for_bounds = o.epsilon;
  if (sub.count("--out")) cfg.output_path = o.out;
  if (sub.count("--format")) cfg.format = o.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  if (sub.count("--hadamard")) cfg.hadamard_path = o.hadamard;
  if (sub.count("--gamma-rule")) cfg.rule = rule_from(o.rule);
  if (sub.count("--threads")) cfg.threads = o.threads;

  const ExperimentResult result = run_experiment(cfg);
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw ParameterError("run: cannot write " + cfg.output_path->string());
    write_result(result, file);
    const auto& s = result.summary;
    out << "wrote " << result.rows.size() << " trials to " << cfg.output_path->string() << "\n"
        << "max_error " << format_double(s.max_error) << ", error_bound " << format_double(s.error_bound)
        << ", violations " << s.violations << "\n";
  } else {
    write_result(result, out);
  }
  if (result.summary.violations != 0) {
    err << "run: " << result.summary.violations << " trials exceeded the error bound\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_gamma(const GammaOptions& o, std::ostream& out) {
  const GammaSpec le{o.n, o.t, o.h, GammaRule::kAtMostH};
  const GammaSpec lemma{o.n, o.t, o.h, GammaRule::kLemmaConsistent};
  le.validate();
  const BigInt closed = count_gamma(le);
  const BigInt at_most = count_gamma_members(le);
  const BigInt exactly = count_gamma_members(lemma);
  out << "n " << o.n << " t " << o.t << " h " << o.h << "\n"
      << "block_cap_active " << (le.below_block_cap() ? "no" : "yes") << "\n"
      << "lemma_count " << to_string(closed) << "\n"
      << "at_most_h_count " << to_string(at_most) << "\n"
      << "lemma_rule_count " << to_string(exactly) << "\n";
  if (closed == at_most) {
    out << "boundary_discrepancy none\n";
  } else {
    out << "boundary_discrepancy " << to_string(at_most - closed)
        << " vectors of weight below h are in the at-most-h set but not in the closed-form count\n";
  }
  out << "mi_closed_form_bits " << fixed(mi_achieved(o.n, o.t, o.h)) << "\n"
      << "mi_at_most_h_bits " << fixed(mi_of_members(le)) << "\n";
  if (!o.enumerate) return kExitOk;

  if (o.n > oracle::kMaxGammaEnumeration) {
    throw ParameterError("gamma: --enumerate needs n <= " + std::to_string(oracle::kMaxGammaEnumeration));
  }
  const auto e = oracle::brute_gamma(le);
  const bool agrees = e.count_lemma == closed && e.count_le == at_most;
  out << "enumerated_at_most_h " << to_string(e.count_le) << "\n"
      << "enumerated_lemma " << to_string(e.count_lemma) << "\n"
      << "enumeration_agrees " << (agrees ? "yes" : "no") << "\n";
  if (o.list) {
    for (const auto& g : e.members) out << sign_string(g) << "\n";
  }
  return agrees ? kExitOk : kExitFailure;
}

int cmd_bounds(const BoundsOptions& o, std::ostream& out) {
  const std::size_t ell = o.ell ? o.ell : o.t;
  const double eps = o.epsilon >= 0.0 ? o.epsilon : error_bound(o.h, o.n, 1.0);
  const BoundReport r = report(o.n, o.t, o.h, ell, eps);
  if (o.json) {
    out << r.to_json() << "\n";
  } else {
    out << "n " << r.n << " t " << r.t << " h " << r.h << " ell " << r.ell << "\n"
        << "publication_bits " << r.publication_bits << "\n"
        << "error_bound " << fixed(r.error_bound) << "\n"
        << "relative_error_bound " << fixed(r.relative_error_bound) << "\n"
        << "gamma_count " << to_string(r.gamma_count) << "\n"
        << "gamma_members " << to_string(r.gamma_members) << "\n"
        << "mi_achieved " << fixed(r.mi_achieved_bits, 3) << " bits\n"
        << "mi_members " << fixed(r.mi_members_bits, 3) << " bits\n"
        << "epsilon " << fixed(r.epsilon) << "\n"
        << "eps_prime " << fixed(r.eps_prime) << "\n"
        << "mu " << to_string(r.mu) << "\n"
        << "mi_lower " << fixed(r.mi_lower_bits, 3) << " bits\n"
        << "mi_lower_closed_form "
        << (r.mi_lower_closed_form_bits ? fixed(*r.mi_lower_closed_form_bits, 3) + " bits" : "n/a (e > eps'^2)")
        << "\n"
        << "gap " << fixed(r.gap_bits, 3) << " bits" << (r.gap_violated ? " (VIOLATED)" : "") << "\n";
  }
  if (o.table) {
    out << "comparison n,t,h,scheme_bits,scheme_expression,lower_bits,lower_expression\n";
    for (std::size_t n : {64, 256, 1024, 4096}) {
      // t = n^(1/2), the delta = 1/2 point of the regime
      const auto t = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
      const auto c = compare_regime(n, t, o.h);
      out << c.n << ',' << c.t << ',' << c.h << ',' << fixed(c.scheme_bits, 3) << ','
          << fixed(c.scheme_expression, 3) << ',' << fixed(c.lower_bits, 3) << ','
          << fixed(c.lower_expression, 3) << "\n";
    }
  } else {
    const auto c = compare_regime(o.n, o.t, o.h);
    out << "comparison scheme_bits " << fixed(c.scheme_bits, 3) << " scheme_expression "
        << fixed(c.scheme_expression, 3) << " lower_bits " << fixed(c.lower_bits, 3) << " lower_expression "
        << fixed(c.lower_expression, 3) << "\n";
  }
  return r.gap_violated ? kExitFailure : kExitOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const auto results = run_verification(o.seed);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed ? kExitFailure : kExitOk;
}

int cmd_session(const SessionOptions& o, std::ostream& out) {
  SchemeParams params;
  params.n = o.n;
  params.t = o.t;
  params.h = o.h;
  params.rule = rule_from(o.rule);
  if (!o.hadamard.empty()) params.hadamard = load_hadamard(o.hadamard);
  GammaSpec{o.n, o.t, o.h}.validate();
  const Scheme scheme(params);
  auto rng = data_rng(o.seed);
  const SignVector w = random_sign_vector(o.n, rng);
  const auto x = random_data_vector(o.n, o.x_norm, rng);
  const Transcript tr = run_session(scheme, w, x, o.seed, SessionMode::kTest);
  if (o.hex) {
    out << wire::to_hex(transcript_wire_bytes(tr)) << "\n";
  } else {
    out << transcript_to_json(tr);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Private inference over +-1 linear models", "qpi"};
  app.set_help_flag("--help", "Print this help");
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Monte Carlo experiment over random (w, x)");
  run_cmd->add_option("--config", run.config, "JSON config; flags override its fields")->check(CLI::ExistingFile);
  run_cmd->add_option("--n", run.n, "Vector length");
  run_cmd->add_option("--t", run.t, "Number of blocks / revealed inner products");
  run_cmd->add_option("--h", run.h, "Perturbation weight");
  run_cmd->add_option("--trials", run.trials, "Number of sessions");
  run_cmd->add_option("--seed", run.seed, "Base seed; trial i uses seed + i");
  run_cmd->add_option("--x-norm", run.x_norm, "Euclidean norm of x");
  run_cmd->add_option("--epsilon", run.epsilon, "eps for the linear-decoding lower bound");
  run_cmd->add_option("--out", run.out, "Output file (default stdout)");
  run_cmd->add_option("--format", run.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  run_cmd->add_option("--hadamard", run.hadamard, "Hadamard matrix file")->check(CLI::ExistingFile);
  run_cmd->add_option("--gamma-rule", run.rule, "at-most-h or lemma")->check(CLI::IsMember({"at-most-h", "lemma"}));
  run_cmd->add_option("--threads", run.threads, "Worker threads (0 = all cores)");

  GammaOptions gamma;
  auto* gamma_cmd = app.add_subcommand("gamma", "Size of the perturbation family");
  gamma_cmd->add_option("--n", gamma.n)->required();
  gamma_cmd->add_option("--t", gamma.t)->required();
  gamma_cmd->add_option("--h", gamma.h)->required();
  gamma_cmd->add_flag("--enumerate", gamma.enumerate, "Cross-check by exhaustive enumeration (n <= 20)");
  gamma_cmd->add_flag("--list", gamma.list, "With --enumerate, print every member");

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Error and privacy bounds");
  bounds_cmd->add_option("--n", bounds.n)->required();
  bounds_cmd->add_option("--t", bounds.t)->required();
  bounds_cmd->add_option("--h", bounds.h)->required();
  bounds_cmd->add_option("--ell", bounds.ell, "Revealed dimensions for the lower bound (default t)");
  bounds_cmd->add_option("--epsilon", bounds.epsilon, "Decoding error (default 2 sqrt(h(1-h/n)))");
  bounds_cmd->add_flag("--json", bounds.json, "Print the report as JSON");
  bounds_cmd->add_flag("--table", bounds.table, "Print comparison rows for n = 64..4096, t = sqrt(n)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle suite");
  verify_cmd->add_option("--seed", verify.seed);

  SessionOptions session;
  auto* session_cmd = app.add_subcommand("session", "Dump one protocol transcript");
  session_cmd->add_option("--n", session.n);
  session_cmd->add_option("--t", session.t);
  session_cmd->add_option("--h", session.h);
  session_cmd->add_option("--seed", session.seed);
  session_cmd->add_option("--x-norm", session.x_norm);
  session_cmd->add_option("--gamma-rule", session.rule)->check(CLI::IsMember({"at-most-h", "lemma"}));
  session_cmd->add_option("--hadamard", session.hadamard)->check(CLI::ExistingFile);
  session_cmd->add_flag("--hex", session.hex, "Print the QUERY, ANSWER and RESULT frames as hex");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qpi: " << e.what() << "\n" << "run 'qpi --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run, *run_cmd, out, err);
    if (*gamma_cmd) return cmd_gamma(gamma, out);
    if (*bounds_cmd) return cmd_bounds(bounds, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*session_cmd) return cmd_session(session, out);
  } catch (const ParameterError& e) {
    err << "qpi: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qpi: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qpi::cli
