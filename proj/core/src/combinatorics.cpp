// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpi/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qpi {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step.
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

BigInt binomial_prefix_sum(std::uint64_t n, std::uint64_t m) {
  BigInt sum = 0;
  BigInt term = 1;
  const std::uint64_t top = m < n ? m : n;
  for (std::uint64_t j = 0; j <= top; ++j) {
    sum += term;
    term *= (n - j);
    term /= (j + 1);
  }
  return sum;
}

double log2_big(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log2_big: argument must be positive");
  const std::size_t msb = boost::multiprecision::msb(value);
  if (msb < 63) return std::log2(static_cast<double>(value.convert_to<std::uint64_t>()));
  // Keep the top 63 bits; the discarded tail affects only the last ulp.
  const std::size_t shift = msb - 62;
  const BigInt top = value >> shift;
  return std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(shift);
}

std::string to_string(const BigInt& value) { return value.str(); }

std::uint64_t floor_square(double x) {
  if (!std::isfinite(x) || x < 0) throw std::domain_error("floor_square: need finite x >= 0");
  const double sq = x * x;
  const double err = std::fma(x, x, -sq);  // x*x == sq + err exactly
  double fl = std::floor(sq);
  if (sq == fl && err < 0) fl -= 1.0;
  if (fl >= static_cast<double>(std::numeric_limits<std::uint64_t>::max())) {
    throw std::overflow_error("floor_square: result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(fl);
}

double harmonic(std::uint64_t n) {
  // Summed smallest-first.
  double h = 0.0;
  for (std::uint64_t i = n; i >= 1; --i) h += 1.0 / static_cast<double>(i);
  return h;
}

}  // namespace qpi
