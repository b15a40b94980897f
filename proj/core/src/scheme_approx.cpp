// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpi/scheme_approx.hpp"

#include <cmath>

#include "qpi/bounds.hpp"
#include "qpi/errors.hpp"

namespace qpi {

Scheme::Scheme(const SchemeParams& params)
    : partition_(params.n, params.t),
      coding_(params.hadamard ? *params.hadamard : sylvester_of_order(params.t), partition_),
      syndrome_(partition_),
      gamma_(GammaSpec{params.n, params.t, params.h, params.rule}) {}

SignVector server_query(const SignVector& w, const SignVector& g, const SyndromeMatrix& m) {
  require_length("server_query", m.n(), w.size());
  require_length("server_query", m.n(), g.size());
  return syndrome(m, oplus(w, g));
}

SignVector server_query(const SignVector& w, const SignVector& g, const SyndromeMatrix& m, const GammaSpec& spec) {
  if (!gamma_contains(g, spec)) {
    throw GammaViolation("server_query: perturbation of weight " + std::to_string(hamming_weight(g)) +
                         " is not in Gamma(n=" + std::to_string(spec.n) + ", t=" + std::to_string(spec.t) +
                         ", h=" + std::to_string(spec.h) + ")");
  }
  return server_query(w, g, m);
}

std::vector<double> user_answer(const SignVector& q, std::span<const double> x, const CodingMatrix& c,
                                const SyndromeMatrix& m) {
  require_length("user_answer", m.rows(), q.size());
  require_length("user_answer", c.cols(), x.size());
  const SignVector u = solve_syndrome(m, q);
  return answer_products(user_vectors(u, c), x);
}

std::vector<double> decode_coefficients(const SignVector& w, const SignVector& q, const CodingMatrix& c,
                                        const SyndromeMatrix& m) {
  require_length("decode_coefficients", m.rows(), q.size());
  return projection_coefficients(w, solve_syndrome(m, q), c);
}

double server_decode(const SignVector& w, const SignVector& q, std::span<const double> answers,
                     const CodingMatrix& c, const SyndromeMatrix& m) {
  require_length("server_decode answers", c.rows(), answers.size());
  const auto alpha = decode_coefficients(w, q, c, m);
  double y = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) y += alpha[i] * answers[i];
  return y;
}

std::vector<double> closest_vector(const SignVector& w, const SignVector& u_shift, const CodingMatrix& c) {
  const BlockPartition& p = c.partition();
  const auto s = block_agreement(w, u_shift, p);
  const double scale = static_cast<double>(p.t()) / static_cast<double>(p.n());
  std::vector<double> out(p.n());
  for (std::size_t j = 0; j < p.n(); ++j) {
    out[j] = scale * static_cast<double>(u_shift[j] * s[p.block_of(j)]);
  }
  return out;
}

double approx_distance(const SignVector& w, const SignVector& u_shift, const BlockPartition& p) {
  const std::size_t d = hamming_distance(w, u_shift);
  const auto bw = block_weights(oplus(w, u_shift), p);
  // n d - t sum w_p^2 is an exact integer; divide once at the end.
  long long sum_sq = 0;
  for (std::size_t x : bw) sum_sq += static_cast<long long>(x * x);
  const long long numer = static_cast<long long>(p.n()) * static_cast<long long>(d) -
                          static_cast<long long>(p.t()) * sum_sq;
  return 2.0 * std::sqrt(static_cast<double>(numer) / static_cast<double>(p.n()));
}

std::mt19937_64 session_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 1U};
  return std::mt19937_64(seq);
}

std::mt19937_64 data_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0U};
  return std::mt19937_64(seq);
}

SignVector random_sign_vector(std::size_t n, std::mt19937_64& rng) {
  SignVector v(n);
  for (std::size_t j = 0; j < n; j += 64) {
    const std::uint64_t bits = rng();
    for (std::size_t k = 0; k < 64 && j + k < n; ++k) v.set_bit(j + k, (bits >> k) & 1U);
  }
  return v;
}

std::vector<double> random_data_vector(std::size_t n, double x_norm, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(n);
  double sq = 0.0;
  for (auto& v : x) {
    v = normal(rng);
    sq += v * v;
  }
  const double norm = std::sqrt(sq);
  const double scale = norm > 0.0 ? x_norm / norm : 0.0;
  for (auto& v : x) v *= scale;
  return x;
}

Transcript run_session(const Scheme& scheme, const SignVector& w, std::span<const double> x, std::uint64_t seed,
                       SessionMode mode) {
  require_length("run_session w", scheme.n(), w.size());
  require_length("run_session x", scheme.n(), x.size());
  auto rng = session_rng(seed);

  Transcript tr;
  tr.n = scheme.n();
  tr.t = scheme.t();
  tr.h = scheme.h();
  tr.seed = seed;
  tr.g = scheme.gamma_sampler().sample(rng);
  tr.query = server_query(w, tr.g, scheme.syndrome_matrix(), scheme.gamma_spec());
  tr.shift = solve_syndrome(scheme.syndrome_matrix(), tr.query);
  tr.answers = user_answer(tr.query, x, scheme.coding_matrix(), scheme.syndrome_matrix());
  tr.estimate = server_decode(w, tr.query, tr.answers, scheme.coding_matrix(), scheme.syndrome_matrix());
  if (mode == SessionMode::kTest) {
    tr.truth = w.dot(x);
    double sq = 0.0;
    for (double v : x) sq += v * v;
    tr.bound = error_bound(scheme.h(), scheme.n(), std::sqrt(sq));
  }
  return tr;
}

}  // namespace qpi
