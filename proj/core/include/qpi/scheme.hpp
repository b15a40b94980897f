// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "qpi/gamma.hpp"
#include "qpi/gf2.hpp"
#include "qpi/hadamard.hpp"
#include "qpi/scheme_exact.hpp"

namespace qpi {

/// (n, t, h, L). When hadamard is unset a Sylvester matrix of order t is used.
struct SchemeParams {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t h = 0;
  std::optional<HadamardMatrix> hadamard;
  GammaRule rule = GammaRule::kAtMostH;
};

/// Everything both parties derive from the public parameters: the
/// partition, L, C, M and the Gamma sampler. Immutable once built.
class Scheme {
 public:
  explicit Scheme(const SchemeParams& params);

  std::size_t n() const noexcept { return partition_.n(); }
  std::size_t t() const noexcept { return partition_.t(); }
  std::size_t h() const noexcept { return gamma_.spec().h; }

  const BlockPartition& partition() const noexcept { return partition_; }
  const CodingMatrix& coding_matrix() const noexcept { return coding_; }
  const SyndromeMatrix& syndrome_matrix() const noexcept { return syndrome_; }
  const GammaSpec& gamma_spec() const noexcept { return gamma_.spec(); }
  const GammaSampler& gamma_sampler() const noexcept { return gamma_; }

  /// Bits the server publishes per query.
  std::size_t publication_bits() const noexcept { return n() - t(); }
  /// Inner products the user reveals.
  std::size_t revealed_dimensions() const noexcept { return t(); }

 private:
  BlockPartition partition_;
  CodingMatrix coding_;
  SyndromeMatrix syndrome_;
  GammaSampler gamma_;
};

/// Runs the exact scheme end to end and returns sum_i beta_i <v_i, x> = <w, x>.
double exact_infer(const SignVector& w, std::span<const double> x, const Scheme& scheme);

}  // namespace qpi
