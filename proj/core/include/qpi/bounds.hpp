// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

// Closed-form analysis of the approximate scheme and of linear decoding in
// general. Information quantities are in bits (log base 2); the natural log
// appears only in eps' = eps sqrt(ln n + 1).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qpi/combinatorics.hpp"
#include "qpi/gamma.hpp"
#include "qpi/gf2.hpp"

namespace qpi {

/// 2 x_norm sqrt(h (1 - h/n)); worst-case |<w', x> - <w, x>|.
double error_bound(std::size_t h, std::size_t n, double x_norm);

/// sqrt(h (1 - h/n)) / sqrt(n); the error relative to the range of <w, x>.
double relative_error_bound(std::size_t h, std::size_t n);

/// I(W; Q) = n - t - log2 |Gamma| using the closed-form count.
double mi_achieved(std::size_t n, std::size_t t, std::size_t h);

/// n - t - log2 of the size of the set the sampler actually draws from.
double mi_of_members(const GammaSpec& spec);

/// eps sqrt(ln n + 1).
double closew_bound(double epsilon, std::size_t n);
/// eps sqrt(H_n), the sharper value the harmonic argument gives.
double closew_bound_harmonic(double epsilon, std::size_t n);

/// mu(l, n, eps') = (2 sum_{j<l} binom(n-1, j)) (sum_{j<=floor(eps'^2)} binom(n, j)).
BigInt mu_bound(std::size_t ell, std::size_t n, double eps_prime);

struct MiLowerBound {
  double eps_prime = 0.0;
  std::uint64_t eps_prime_sq_floor = 0;
  BigInt mu;
  double bits = 0.0;          // n - log2 mu, may be negative
  double clamped_bits = 0.0;  // max(bits, 0)
  /// n - l log2 n - eps^2 log2^2 n - 1, present only when e <= eps'^2.
  std::optional<double> closed_form_bits;
};

/// I(W; Q) >= n - log2 mu(l, n, eps sqrt(ln n + 1)) for any linear decoder.
MiLowerBound mi_lower(std::size_t n, std::size_t ell, double epsilon);

/// (e n / m)^m, an upper bound on sum_{k<=m} binom(n, k).
double binomial_sum_bound(std::size_t m, std::size_t n);

/// Maximum number of orthants an l-dimensional subspace can meet, via the
/// cell count of n hyperplanes through the origin of R^l.
BigInt orthant_cell_bound(std::size_t hyperplanes, std::size_t ell);

/// Euclidean distance from sign vector v to the closed orthant with
/// signature a: sqrt(d_H(a, v)).
double orthant_distance(const SignVector& signature, const SignVector& v);

struct BoundReport {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t h = 0;
  std::size_t ell = 0;
  double epsilon = 0.0;
  double eps_prime = 0.0;
  double error_bound = 0.0;           // for ||x|| = 1
  double relative_error_bound = 0.0;
  BigInt gamma_count;                 // closed-form count
  BigInt gamma_members;               // at-most-h set size
  double mi_achieved_bits = 0.0;
  double mi_members_bits = 0.0;
  BigInt mu;
  double mi_lower_bits = 0.0;
  std::optional<double> mi_lower_closed_form_bits;
  double gap_bits = 0.0;              // mi_achieved - mi_lower
  bool gap_violated = false;          // would mean one side is wrong
  std::size_t publication_bits = 0;

  std::string to_json() const;
};

BoundReport report(std::size_t n, std::size_t t, std::size_t h, std::size_t ell, double epsilon);

/// Both sides of the scheme-versus-lower-bound comparison for t = l and a
/// constant h: the scheme's I(W;Q) against the linear-decoding floor at
/// eps = 2 sqrt(h), each as an exact value and as the asymptotic expression.
struct RegimeComparison {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t h = 0;
  double scheme_bits = 0.0;          // n - t - log2 |Gamma|
  double scheme_expression = 0.0;    // n - t - h log2 n
  double lower_bits = 0.0;           // n - log2 mu(t, n, 2 sqrt(h) sqrt(ln n + 1))
  double lower_expression = 0.0;     // n - t log2 n - 4 h log2^2 n
};

RegimeComparison compare_regime(std::size_t n, std::size_t t, std::size_t h);

}  // namespace qpi
