// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

// Exact coset scheme: the server publishes the syndrome of w, the user
// answers with <v_i, x> for v_i = u (+) c_i, and the server recovers <w, x>
// exactly because w lies in the real span of the v_i.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qpi/gf2.hpp"
#include "qpi/hadamard.hpp"

namespace qpi {

/// C = L (x) 1_{n/t}: row i is the block-constant vector with value
/// L(i, r) on block S_r. Equivalently c_i = (+)_r L(i, r) (.) 1_{S_r}.
class CodingMatrix {
 public:
  CodingMatrix(const HadamardMatrix& l, const BlockPartition& p);

  std::size_t rows() const noexcept { return partition_.t(); }
  std::size_t cols() const noexcept { return partition_.n(); }
  const HadamardMatrix& hadamard() const noexcept { return l_; }
  const BlockPartition& partition() const noexcept { return partition_; }

  int operator()(std::size_t i, std::size_t j) const noexcept { return l_(i, partition_.block_of(j)); }
  const SignVector& row(std::size_t i) const noexcept { return rows_[i]; }

 private:
  HadamardMatrix l_;
  BlockPartition partition_;
  std::vector<SignVector> rows_;
};

CodingMatrix build_coding_matrix(const HadamardMatrix& l, const BlockPartition& p);

/// v_i = u (+) c_i for i = 0..t-1.
std::vector<SignVector> user_vectors(const SignVector& u, const CodingMatrix& c);

/// s_r = sum_{j in S_r} w_j u_j = n/t - 2 w_H((w (+) u)|_{S_r}).
std::vector<long> block_agreement(const SignVector& w, const SignVector& u, const BlockPartition& p);

/// (1/n) w U C^T; the least-squares coefficients of w on {u (+) c_i}.
std::vector<double> projection_coefficients(const SignVector& w, const SignVector& u, const CodingMatrix& c);

/// beta with sum_i beta_i v_i = w. Requires w (+) u in V, else CosetMismatch.
std::vector<double> exact_coeffs(const SignVector& w, const SignVector& u, const CodingMatrix& c);

/// <v, x> for every v.
std::vector<double> answer_products(std::span<const SignVector> vectors, std::span<const double> x);

}  // namespace qpi
