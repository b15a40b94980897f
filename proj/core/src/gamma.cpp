// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpi/gamma.hpp"

#include <algorithm>
#include <string>

#include "qpi/errors.hpp"

namespace qpi {
namespace {

// Coefficients of (sum_{e <= emax} binom(b, e) z^e)^t truncated at degree cap.
std::vector<BigInt> profile_polynomial(const GammaSpec& spec, std::size_t cap) {
  const std::size_t emax = spec.max_block_weight();
  std::vector<BigInt> block(emax + 1);
  for (std::size_t e = 0; e <= emax; ++e) block[e] = binomial(spec.block_size(), e);
  std::vector<BigInt> acc(cap + 1);
  acc[0] = 1;
  for (std::size_t i = 0; i < spec.t; ++i) {
    std::vector<BigInt> next(cap + 1);
    for (std::size_t s = 0; s <= cap; ++s) {
      if (acc[s] == 0) continue;
      for (std::size_t e = 0; e <= emax && s + e <= cap; ++e) next[s + e] += acc[s] * block[e];
    }
    acc = std::move(next);
  }
  return acc;
}

// Marks a uniform size-k subset of [0, m) in out, shifted by base (Floyd).
void choose_subset(std::size_t m, std::size_t k, std::size_t base, SignVector& out, std::mt19937_64& rng) {
  std::vector<bool> picked(m, false);
  for (std::size_t j = m - k; j < m; ++j) {
    std::uniform_int_distribution<std::size_t> pick(0, j);
    const std::size_t r = pick(rng);
    if (picked[r]) {
      picked[j] = true;
    } else {
      picked[r] = true;
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (picked[j]) out.set_bit(base + j, true);
  }
}

}  // namespace

const char* to_string(GammaRule rule) {
  switch (rule) {
    case GammaRule::kAtMostH:
      return "at-most-h";
    case GammaRule::kLemmaConsistent:
      return "lemma";
  }
  return "unknown";
}

GammaRule parse_gamma_rule(const std::string& name) {
  if (name == "at-most-h") return GammaRule::kAtMostH;
  if (name == "lemma") return GammaRule::kLemmaConsistent;
  throw ParameterError("unknown gamma rule '" + name + "' (expected at-most-h or lemma)");
}

void GammaSpec::validate() const {
  if (t == 0 || n == 0 || n % t != 0) {
    throw ParameterError("gamma spec needs t | n (n = " + std::to_string(n) + ", t = " + std::to_string(t) + ")");
  }
  if (2 * h > n) {
    throw ParameterError("h = " + std::to_string(h) + " exceeds n/2 = " + std::to_string(n) + "/2");
  }
}

bool gamma_contains(const SignVector& g, const GammaSpec& spec) {
  require_length("gamma_contains", spec.n, g.size());
  const std::size_t weight = hamming_weight(g);
  if (spec.rule == GammaRule::kLemmaConsistent && spec.below_block_cap()) {
    if (weight != spec.h) return false;
  } else if (weight > spec.h) {
    return false;
  }
  const BlockPartition p(spec.n, spec.t);
  for (std::size_t w : block_weights(g, p)) {
    if (spec.exceeds_block_cap(w)) return false;
  }
  return true;
}

BigInt count_gamma(const GammaSpec& spec) {
  spec.validate();
  if (spec.below_block_cap()) return binomial(spec.n, spec.h);
  const auto poly = profile_polynomial(spec, spec.h);
  BigInt total = 0;
  for (const auto& c : poly) total += c;
  return total;
}

BigInt count_gamma_members(const GammaSpec& spec) {
  spec.validate();
  const auto poly = profile_polynomial(spec, spec.h);
  if (spec.rule == GammaRule::kLemmaConsistent && spec.below_block_cap()) return poly[spec.h];
  BigInt total = 0;
  for (const auto& c : poly) total += c;
  return total;
}

GammaSampler::GammaSampler(const GammaSpec& spec) : spec_(spec) {
  spec_.validate();
  const std::size_t emax = spec_.max_block_weight();
  max_weight_ = std::min(spec_.h, spec_.t * emax);
  block_ways_.resize(emax + 1);
  for (std::size_t e = 0; e <= emax; ++e) block_ways_[e] = binomial(spec_.block_size(), e);

  suffix_.assign(spec_.t + 1, std::vector<BigInt>(max_weight_ + 1));
  suffix_[spec_.t][0] = 1;
  for (std::size_t i = spec_.t; i-- > 0;) {
    for (std::size_t s = 0; s <= max_weight_; ++s) {
      BigInt ways = 0;
      for (std::size_t e = 0; e <= emax && e <= s; ++e) ways += block_ways_[e] * suffix_[i + 1][s - e];
      suffix_[i][s] = std::move(ways);
    }
  }

  if (spec_.rule == GammaRule::kLemmaConsistent && spec_.below_block_cap()) {
    allowed_ = {spec_.h};
  } else {
    for (std::size_t s = 0; s <= max_weight_; ++s) allowed_.push_back(s);
  }
  total_ = 0;
  for (std::size_t s : allowed_) total_ += suffix_[0][s];
}

SignVector GammaSampler::sample(std::mt19937_64& rng) const {
  // Total weight first, then each block's share given what remains.
  BigInt r = uniform_below(total_, rng);
  std::size_t remaining = allowed_.back();
  for (std::size_t s : allowed_) {
    if (r < suffix_[0][s]) {
      remaining = s;
      break;
    }
    r -= suffix_[0][s];
  }

  SignVector g(spec_.n);
  const std::size_t b = spec_.block_size();
  for (std::size_t i = 0; i < spec_.t; ++i) {
    BigInt pick = uniform_below(suffix_[i][remaining], rng);
    std::size_t chosen = 0;
    for (std::size_t e = 0; e < block_ways_.size() && e <= remaining; ++e) {
      const BigInt ways = block_ways_[e] * suffix_[i + 1][remaining - e];
      if (pick < ways) {
        chosen = e;
        break;
      }
      pick -= ways;
    }
    choose_subset(b, chosen, i * b, g, rng);
    remaining -= chosen;
  }
  return g;
}

SignVector sample_gamma(const GammaSpec& spec, std::mt19937_64& rng) { return GammaSampler(spec).sample(rng); }

SignVector sample_gamma_rejection(const GammaSpec& spec, std::mt19937_64& rng) {
  spec.validate();
  std::vector<std::size_t> classes;
  if (spec.rule == GammaRule::kLemmaConsistent && spec.below_block_cap()) {
    classes = {spec.h};
  } else {
    for (std::size_t k = 0; k <= spec.h; ++k) classes.push_back(k);
  }
  std::vector<BigInt> weights;
  BigInt total = 0;
  for (std::size_t k : classes) {
    weights.push_back(binomial(spec.n, k));
    total += weights.back();
  }
  const BlockPartition p(spec.n, spec.t);
  for (;;) {
    BigInt r = uniform_below(total, rng);
    std::size_t k = classes.back();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (r < weights[c]) {
        k = classes[c];
        break;
      }
      r -= weights[c];
    }
    SignVector g(spec.n);
    choose_subset(spec.n, k, 0, g, rng);
    const auto bw = block_weights(g, p);
    if (std::none_of(bw.begin(), bw.end(), [&](std::size_t w) { return spec.exceeds_block_cap(w); })) return g;
  }
}

BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng) {
  if (bound <= 0) throw ParameterError("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  const BigInt top = bound - 1;
  const std::size_t bits = boost::multiprecision::msb(top) + 1;
  const std::size_t words = (bits + 63) / 64;
  const BigInt mask = (BigInt(1) << bits) - 1;
  for (;;) {
    BigInt x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      x <<= 64;
      x |= rng();
    }
    x &= mask;
    if (x < bound) return x;
  }
}

}  // namespace qpi
