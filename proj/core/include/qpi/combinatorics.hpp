// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpi {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// sum_{j=0}^{m} binom(n, j), exact. m may exceed n.
BigInt binomial_prefix_sum(std::uint64_t n, std::uint64_t m);

/// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& value);

std::string to_string(const BigInt& value);

/// Exact floor(x*x) for a finite non-negative double x.
///
/// The product is split into its rounded value and the fma residual so a
/// square that lands just below an integer is not rounded up onto it.
std::uint64_t floor_square(double x);

/// n-th harmonic number sum_{i=1}^{n} 1/i.
double harmonic(std::uint64_t n);

}  // namespace qpi
