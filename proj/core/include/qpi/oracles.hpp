// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference implementations. Each one recomputes a closed form
// from the definitions (dense linear algebra or exhaustive enumeration)
// and is only meant for small n.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qpi/combinatorics.hpp"
#include "qpi/gamma.hpp"
#include "qpi/gf2.hpp"
#include "qpi/scheme_exact.hpp"

namespace qpi::oracle {

inline constexpr std::size_t kMaxGammaEnumeration = 20;
inline constexpr std::size_t kMaxNeighborhoodN = 16;
inline constexpr double kBoundaryTolerance = 1e-9;

/// l linearly independent rows in R^n.
class SubspaceBasis {
 public:
  /// Throws ParameterError if the rows are rank deficient (pivot tolerance 1e-9).
  explicit SubspaceBasis(Eigen::MatrixXd rows);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(rows_.rows()); }
  std::size_t ambient() const noexcept { return static_cast<std::size_t>(rows_.cols()); }
  const Eigen::MatrixXd& rows() const noexcept { return rows_; }
  /// n x l matrix with orthonormal columns spanning the row space.
  Eigen::MatrixXd orthonormal() const;

 private:
  Eigen::MatrixXd rows_;
};

/// Standard-normal rows; redrawn until full rank.
SubspaceBasis random_subspace(std::size_t ell, std::size_t n, std::mt19937_64& rng);

/// Projection of w onto span_R{u' (+) c_i} through dense normal equations.
std::vector<double> brute_closest(const SignVector& w, const SignVector& u_shift, const CodingMatrix& c);

struct GammaEnumeration {
  BigInt count_le;       // vectors with w_H <= h and all block caps met
  BigInt count_lemma;    // closed-form formula evaluated by tuple enumeration
  BigInt count_members;  // vectors accepted by gamma_contains under spec.rule
  std::vector<SignVector> members;
};

/// Exhaustive over {+-1}^n, n <= 20.
GammaEnumeration brute_gamma(const GammaSpec& spec);

struct MutualInformation {
  double bits = 0.0;                  // I(W; Q) by direct summation
  double conditional_entropy = 0.0;   // H(W | Q)
  std::size_t queries = 0;            // |supp Q|
  std::uint64_t min_support = 0;      // min_q |supp W | Q=q|
  std::uint64_t max_support = 0;
  bool conditionals_uniform = true;   // every W | Q=q uniform on its support
  BigInt gamma_size;                  // size of the enumerated Gamma
};

/// Joint distribution of (W, Q) for W uniform and g uniform on Gamma,
/// enumerated exhaustively. Needs 2n - t <= 26.
MutualInformation brute_mi(const GammaSpec& spec);

/// Number of y in {+-1}^n with d_2(y, R) <= eps' (+1e-9), n <= 16.
std::uint64_t brute_neighborhood(const SubspaceBasis& basis, double eps_prime);

/// Distinct strict sign patterns of x B over `samples` uniform x on the
/// unit sphere of R^l. A lower estimate of the orthants R meets.
std::uint64_t brute_orthants(const SubspaceBasis& basis, std::size_t samples, std::mt19937_64& rng);

struct WorstCase {
  double distance = 0.0;            // 2 sqrt(max objective)
  double objective = 0.0;           // max sum_i d_i - (t/n) d_i^2
  std::vector<std::size_t> argmax;  // block-weight profile reaching it
  std::uint64_t tuples = 0;         // feasible profiles visited
};

inline constexpr std::uint64_t kMaxWorstCaseTuples = 10'000'000;

/// Exact maximum of the per-block distance objective over admissible
/// block-weight profiles.
WorstCase brute_worstcase_distance(const GammaSpec& spec);

struct LagrangePoint {
  std::vector<double> point;
  double value = 0.0;
  double multiplier = 0.0;
};

/// min sum d_i^2 s.t. sum d_i = total over R^t, from the KKT system.
LagrangePoint lagrange_minimum(double total, std::size_t t);

/// Extremal residual from the counting argument: |r_i| = eps / sqrt(i).
std::vector<double> cascade_residual(std::size_t n, double epsilon);

/// Distance from alpha to the closed orthant with the given signature,
/// by clipping wrong-signed coordinates to zero.
double clipped_orthant_distance(const SignVector& signature, const SignVector& alpha);

}  // namespace qpi::oracle
