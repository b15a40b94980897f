// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

// Approximate private inference.
//
//   server: g <- Gamma uniformly, publish q = M (.) (w (+) g)^T
//   user:   u' = solve_syndrome(M, q), answer <u' (+) c_i, x> for each i
//   server: alpha = (1/n) w U' C^T, output sum_i alpha_i answer_i
//
// The output equals <w', x> where w' is the point of span_R{u' (+) c_i}
// closest to w, so the error is at most ||x|| ||w - w'||.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qpi/gamma.hpp"
#include "qpi/gf2.hpp"
#include "qpi/scheme.hpp"
#include "qpi/scheme_exact.hpp"

namespace qpi {

/// q = syndrome(M, w (+) g). No membership check on g.
SignVector server_query(const SignVector& w, const SignVector& g, const SyndromeMatrix& m);
/// Strict variant: throws GammaViolation unless gamma_contains(g, spec).
SignVector server_query(const SignVector& w, const SignVector& g, const SyndromeMatrix& m, const GammaSpec& spec);

/// The user's t inner products <u' (+) c_i, x>.
std::vector<double> user_answer(const SignVector& q, std::span<const double> x, const CodingMatrix& c,
                                const SyndromeMatrix& m);

/// alpha_min = (1/n) w U' C^T for u' = solve_syndrome(M, q).
std::vector<double> decode_coefficients(const SignVector& w, const SignVector& q, const CodingMatrix& c,
                                        const SyndromeMatrix& m);

/// sum_i alpha_min_i answers_i.
double server_decode(const SignVector& w, const SignVector& q, std::span<const double> answers,
                     const CodingMatrix& c, const SyndromeMatrix& m);

/// w' = (t/n) w U' diag(J) U', the closest point to w in span_R{u' (+) c_i}.
std::vector<double> closest_vector(const SignVector& w, const SignVector& u_shift, const CodingMatrix& c);

/// ||w - w'|| = 2 sqrt(d_H(w, u') - (t/n) sum_p w_H((w (+) u')|_{S_p})^2).
double approx_distance(const SignVector& w, const SignVector& u_shift, const BlockPartition& p);

enum class SessionMode {
  kProduction,  // ground truth is not computed
  kTest,        // ground truth and bound are recorded and checked
};

/// One protocol run.
struct Transcript {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t h = 0;
  std::uint64_t seed = 0;
  SignVector g;
  SignVector query;
  SignVector shift;  // u'
  std::vector<double> answers;
  double estimate = 0.0;
  std::optional<double> truth;  // <w, x>, test mode only
  std::optional<double> bound;  // 2 ||x|| sqrt(h(1 - h/n)), test mode only

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// Draws g from seed and runs all three protocol steps.
Transcript run_session(const Scheme& scheme, const SignVector& w, std::span<const double> x, std::uint64_t seed,
                       SessionMode mode = SessionMode::kTest);

/// Generator for the per-session perturbation stream of a seed.
std::mt19937_64 session_rng(std::uint64_t seed);
/// Generator for the (w, x) test-data stream of a seed.
std::mt19937_64 data_rng(std::uint64_t seed);

/// Uniform w in {+-1}^n.
SignVector random_sign_vector(std::size_t n, std::mt19937_64& rng);
/// Standard normal draw rescaled to Euclidean norm x_norm.
std::vector<double> random_data_vector(std::size_t n, double x_norm, std::mt19937_64& rng);

}  // namespace qpi
