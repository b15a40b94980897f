// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "qpi/errors.hpp"
#include "qpi/scheme.hpp"
#include "qpi/scheme_exact.hpp"
#include "support.hpp"

namespace qpi {
namespace {

using test::random_signs;

Scheme make_scheme(std::size_t n, std::size_t t, std::size_t h = 0) {
  SchemeParams p;
  p.n = n;
  p.t = t;
  p.h = h;
  return Scheme(p);
}

// Sum_i beta_i v_i as a dense real vector.
std::vector<double> combine(const std::vector<double>& beta, const std::vector<SignVector>& v) {
  std::vector<double> out(v.front().size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += beta[i] * v[i][j];
  return out;
}

TEST(CodingMatrix, WorkedExampleRows) {
  const BlockPartition p(12, 4);
  const CodingMatrix c(sylvester(2), p);
  const auto s1 = p.indicator(0), s2 = p.indicator(1), s3 = p.indicator(2), s4 = p.indicator(3);
  EXPECT_EQ(c.row(0), SignVector(12));
  EXPECT_EQ(c.row(1), s2 ^ s4);
  EXPECT_EQ(c.row(2), s3 ^ s4);
  EXPECT_EQ(c.row(3), s2 ^ s3);
  (void)s1;
}

TEST(CodingMatrix, KroneckerLayout) {
  const CodingMatrix c(sylvester(3), BlockPartition(40, 8));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 40; ++j) ASSERT_EQ(c(i, j), sylvester(3)(i, j / 5));
}

TEST(CodingMatrix, SingleBlockIsAllPlus) {
  const CodingMatrix c(sylvester(0), BlockPartition(7, 1));
  EXPECT_EQ(c.row(0), SignVector(7));
}

TEST(CodingMatrix, GramIsNTimesIdentity) {
  const CodingMatrix c(sylvester(2), BlockPartition(12, 4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      long dot = 0;
      for (std::size_t j = 0; j < 12; ++j) dot += c(a, j) * c(b, j);
      EXPECT_EQ(dot, a == b ? 12 : 0);
    }
  }
}

TEST(CodingMatrix, OrderMustMatchBlocks) {
  EXPECT_THROW(CodingMatrix(sylvester(1), BlockPartition(12, 4)), ParameterError);
}

TEST(UserVectors, AllPlusShiftGivesCodingRows) {
  const CodingMatrix c(sylvester(2), BlockPartition(12, 4));
  const auto v = user_vectors(SignVector(12), c);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(v[i], c.row(i));
}

TEST(UserVectors, PairwiseOplusCancelsShift) {
  auto rng = test::rng_for(11);
  const CodingMatrix c(sylvester(2), BlockPartition(12, 4));
  const auto u = random_signs(12, rng);
  const auto v = user_vectors(u, c);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(v[i] ^ v[j], c.row(i) ^ c.row(j));
  EXPECT_EQ(v[0], u);  // first coding row is all +1
}

TEST(BlockAgreement, MatchesDirectSum) {
  auto rng = test::rng_for(12);
  const BlockPartition p(24, 6);
  for (int i = 0; i < 100; ++i) {
    const auto w = random_signs(24, rng);
    const auto u = random_signs(24, rng);
    const auto s = block_agreement(w, u, p);
    for (std::size_t r = 0; r < 6; ++r) {
      long direct = 0;
      for (std::size_t j = p.block_begin(r); j < p.block_end(r); ++j) direct += w[j] * u[j];
      ASSERT_EQ(s[r], direct);
    }
  }
}

TEST(ExactCoeffs, WEqualsFirstUserVector) {
  const CodingMatrix c(sylvester(1), BlockPartition(4, 2));
  const auto u = SignVector::from_signs({1, -1, -1, 1});
  const auto beta = exact_coeffs(u, u, c);
  EXPECT_NEAR(beta[0], 1.0, 1e-15);
  EXPECT_NEAR(beta[1], 0.0, 1e-15);
}

TEST(ExactCoeffs, ReconstructsCosetMember) {
  auto rng = test::rng_for(13);
  const BlockPartition p(12, 4);
  const CodingMatrix c(sylvester(2), p);
  const auto u = random_signs(12, rng);
  const auto w = u ^ p.indicator(1);
  const auto rebuilt = combine(exact_coeffs(w, u, c), user_vectors(u, c));
  double err = 0.0;
  for (std::size_t j = 0; j < 12; ++j) err += (rebuilt[j] - w[j]) * (rebuilt[j] - w[j]);
  EXPECT_LT(std::sqrt(err), 1e-12);
}

TEST(ExactCoeffs, RandomCosetMembersLarge) {
  auto rng = test::rng_for(14);
  const BlockPartition p(64, 8);
  const CodingMatrix c(sylvester(3), p);
  for (int i = 0; i < 200; ++i) {
    const auto u = random_signs(64, rng);
    SignVector v(64);
    for (std::size_t r = 0; r < 8; ++r)
      if (rng() & 1U) v ^= p.indicator(r);
    const auto w = u ^ v;
    const auto rebuilt = combine(exact_coeffs(w, u, c), user_vectors(u, c));
    for (std::size_t j = 0; j < 64; ++j) ASSERT_NEAR(rebuilt[j], w[j], 1e-12);
  }
}

TEST(ExactCoeffs, OutsideCosetThrows) {
  const CodingMatrix c(sylvester(2), BlockPartition(12, 4));
  auto w = SignVector(12);
  w.flip(0);
  EXPECT_THROW(exact_coeffs(w, SignVector(12), c), CosetMismatch);
}

TEST(AnswerProducts, ZeroDataGivesZeros) {
  const std::vector<SignVector> v{SignVector(5), SignVector::from_signs({-1, 1, 1, 1, -1})};
  const std::vector<double> x(5, 0.0);
  EXPECT_EQ(answer_products(v, x), (std::vector<double>{0.0, 0.0}));
}

TEST(ExactInfer, ZeroData) {
  const auto s = make_scheme(16, 4);
  auto rng = test::rng_for(15);
  EXPECT_EQ(exact_infer(random_signs(16, rng), std::vector<double>(16, 0.0), s), 0.0);
}

TEST(ExactInfer, MatchesInnerProduct) {
  auto rng = test::rng_for(16);
  for (auto [n, t] : {std::pair<std::size_t, std::size_t>{12, 4}, {4, 2}, {64, 8}, {256, 4}, {8, 8}, {5, 1}}) {
    const auto s = make_scheme(n, t);
    for (int i = 0; i < 100; ++i) {
      const auto w = random_signs(n, rng);
      const auto x = test::random_unit(n, rng);
      ASSERT_NEAR(exact_infer(w, x, s), test::dense_dot(w.to_signs(), x), 1e-9) << n << "," << t;
    }
  }
}

TEST(Scheme, PublicationCost) {
  const auto s = make_scheme(8, 2);
  EXPECT_EQ(s.publication_bits(), 6u);
  EXPECT_EQ(s.revealed_dimensions(), 2u);
  EXPECT_EQ(s.syndrome_matrix().rows(), 6u);
}

TEST(Scheme, CustomHadamard) {
  SchemeParams p;
  p.n = 8;
  p.t = 2;
  p.hadamard = HadamardMatrix::from_rows({{1, -1}, {1, 1}});
  const Scheme s(p);
  auto rng = test::rng_for(17);
  const auto w = random_signs(8, rng);
  const auto x = test::random_unit(8, rng);
  EXPECT_NEAR(exact_infer(w, x, s), test::dense_dot(w.to_signs(), x), 1e-12);
}

}  // namespace
}  // namespace qpi
