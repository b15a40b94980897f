// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

// Small independent helpers shared by the tests. Nothing here calls into the
// library code it is used to check.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qpi/gf2.hpp"

namespace qpi::test {

inline std::mt19937_64 rng_for(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline SignVector random_signs(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> s(n);
  for (auto& v : s) v = (rng() & 1U) ? -1 : 1;
  return SignVector::from_signs(s);
}

inline std::vector<double> random_unit(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  std::vector<double> x(n);
  double sq = 0.0;
  for (auto& v : x) {
    v = d(rng);
    sq += v * v;
  }
  for (auto& v : x) v /= std::sqrt(sq);
  return x;
}

/// Sign vector whose -1 entries sit at the set bits of mask (n <= 64).
inline SignVector from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<int> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = ((mask >> j) & 1U) ? -1 : 1;
  return SignVector::from_signs(s);
}

/// Pascal triangle in doubles, exact for the small arguments the tests use.
inline double choose(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

inline double dense_dot(const std::vector<int>& a, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * x[j];
  return s;
}

}  // namespace qpi::test
