// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

// The perturbation family Gamma the server randomizes over.
//
// A vector g belongs to Gamma when w_H(g) <= h and every block weight is
// strictly below n/(2t). The strict per-block cap is what makes distinct
// members land in distinct cosets of V.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qpi/combinatorics.hpp"
#include "qpi/gf2.hpp"

namespace qpi {

/// Which weight classes make up Gamma.
///
/// kAtMostH is the membership rule: all weights 0..h. kLemmaConsistent keeps
/// only weight exactly h while h < n/(2t) and otherwise agrees with
/// kAtMostH; it is the set whose size the closed-form count
/// (count_gamma) returns in both regimes.
enum class GammaRule { kAtMostH, kLemmaConsistent };

const char* to_string(GammaRule rule);
GammaRule parse_gamma_rule(const std::string& name);

struct GammaSpec {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t h = 0;
  GammaRule rule = GammaRule::kAtMostH;

  /// Throws ParameterError unless t | n and 2h <= n.
  void validate() const;

  std::size_t block_size() const noexcept { return n / t; }
  /// True iff weight >= n/(2t), compared exactly as 2 t weight >= n.
  bool exceeds_block_cap(std::size_t weight) const noexcept { return 2 * t * weight >= n; }
  /// Largest per-block weight strictly below n/(2t).
  std::size_t max_block_weight() const noexcept { return (n - 1) / (2 * t); }
  /// h < n/(2t): every weight-h vector already satisfies the block caps.
  bool below_block_cap() const noexcept { return 2 * t * h < n; }
};

bool gamma_contains(const SignVector& g, const GammaSpec& spec);

/// Closed-form |Gamma|: binom(n, h) when h < n/(2t), else
/// sum over e in E of prod_i binom(n/t, e_i), E = {sum e_i <= h, 0 <= e_i < n/(2t)}.
BigInt count_gamma(const GammaSpec& spec);

/// Exact size of the set gamma_contains accepts under spec.rule.
BigInt count_gamma_members(const GammaSpec& spec);

/// Exact uniform sampler over the set gamma_contains accepts.
///
/// Draws the block-weight profile (e_1..e_t) with probability proportional
/// to its member count using exact big-integer tables, then a uniform
/// e_i-subset in each block.
class GammaSampler {
 public:
  explicit GammaSampler(const GammaSpec& spec);

  const GammaSpec& spec() const noexcept { return spec_; }
  const BigInt& member_count() const noexcept { return total_; }

  SignVector sample(std::mt19937_64& rng) const;

 private:
  GammaSpec spec_;
  std::size_t max_weight_ = 0;          // largest total weight we can reach
  std::vector<std::size_t> allowed_;    // admissible total weights
  std::vector<BigInt> block_ways_;      // binom(n/t, e), e <= max block weight
  // suffix_[i][s]: ways for blocks i..t-1 to carry total weight exactly s.
  std::vector<std::vector<BigInt>> suffix_;
  BigInt total_;
};

SignVector sample_gamma(const GammaSpec& spec, std::mt19937_64& rng);

/// Weight-class rejection sampler: pick weight k with probability
/// proportional to binom(n, k), a uniform weight-k vector, and retry on a
/// block-cap violation. Uniform on the same set as GammaSampler but slow
/// when the caps reject most draws.
SignVector sample_gamma_rejection(const GammaSpec& spec, std::mt19937_64& rng);

/// Uniform integer in [0, bound), bound > 0.
BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng);

}  // namespace qpi
