// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qpi/errors.hpp"
#include "qpi/hadamard.hpp"

namespace qpi {
namespace {

using Rows = std::vector<std::vector<int>>;

const Rows kOrderFour = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};

// Fraction-free Gaussian elimination; exact for t <= 16 with +-1 entries.
__int128 bareiss_det(Rows rows) {
  const std::size_t n = rows.size();
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

TEST(Sylvester, BaseCases) {
  EXPECT_EQ(sylvester(0).rows(), (Rows{{1}}));
  EXPECT_EQ(sylvester(1).rows(), (Rows{{1, 1}, {1, -1}}));
}

TEST(Sylvester, OrderFourIsTheWorkedExampleMatrix) { EXPECT_EQ(sylvester(2).rows(), kOrderFour); }

TEST(Sylvester, Orthogonal) {
  for (unsigned k = 0; k <= 7; ++k) {
    const auto l = sylvester(k);
    const auto t = l.order();
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        long dot = 0;
        for (std::size_t c = 0; c < t; ++c) dot += l(i, c) * l(j, c);
        ASSERT_EQ(dot, i == j ? static_cast<long>(t) : 0) << "k=" << k;
      }
    }
  }
}

TEST(Sylvester, RowAndColumnSums) {
  for (unsigned k = 1; k <= 6; ++k) {
    const auto l = sylvester(k);
    const auto t = static_cast<long>(l.order());
    for (std::size_t i = 0; i < l.order(); ++i) {
      long row = 0, col = 0;
      for (std::size_t j = 0; j < l.order(); ++j) {
        row += l(i, j);
        col += l(j, i);
      }
      EXPECT_EQ(row, i == 0 ? t : 0);
      EXPECT_EQ(col, i == 0 ? t : 0);
    }
  }
}

TEST(Sylvester, DeterminantMagnitude) {
  for (unsigned k = 0; k <= 4; ++k) {
    const auto l = sylvester(k);
    const auto t = static_cast<long double>(l.order());
    const __int128 det = bareiss_det(l.rows());
    const __int128 mag = det < 0 ? -det : det;
    const auto expected = static_cast<__int128>(std::llround(std::pow(t, t / 2)));
    EXPECT_TRUE(mag == expected) << "k=" << k;
  }
}

TEST(Sylvester, RejectsHugeExponent) { EXPECT_THROW(sylvester(kMaxSylvesterExponent + 1), ParameterError); }

TEST(SylvesterOfOrder, PowersOfTwoOnly) {
  EXPECT_EQ(sylvester_of_order(8), sylvester(3));
  EXPECT_THROW(sylvester_of_order(12), ParameterError);
  EXPECT_THROW(sylvester_of_order(0), ParameterError);
}

TEST(Validate, AcceptsKnownMatrices) {
  EXPECT_TRUE(validate_hadamard(sylvester(3).rows()));
  EXPECT_TRUE(validate_hadamard(kOrderFour));
}

TEST(Validate, RejectsAllOnes) {
  const auto r = validate_hadamard({{1, 1}, {1, 1}});
  EXPECT_EQ(r.status, HadamardCheck::Status::kNotOrthogonal);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Validate, RejectsShapeAndEntries) {
  EXPECT_EQ(validate_hadamard({}).status, HadamardCheck::Status::kEmpty);
  EXPECT_EQ(validate_hadamard({{1, 1}, {1}}).status, HadamardCheck::Status::kNotSquare);
  EXPECT_EQ(validate_hadamard({{1, 0}, {1, -1}}).status, HadamardCheck::Status::kBadEntry);
}

TEST(Validate, AcceptsNonSylvesterOrderTwelve) {
  // Paley construction for q = 11
  const int q = 11;
  std::vector<int> chi(q, -1);
  chi[0] = 0;
  for (int x = 1; x < q; ++x) chi[(x * x) % q] = 1;
  Rows h(12, std::vector<int>(12, 1));
  for (int i = 1; i < 12; ++i) {
    h[i][0] = -1;
    for (int j = 1; j < 12; ++j) h[i][j] = (i == j) ? 1 : chi[((j - i) % q + q) % q];
  }
  // Q is antisymmetric for q = 3 mod 4; I + S is the Hadamard matrix
  for (int i = 1; i < 12; ++i) h[0][i] = 1;
  EXPECT_TRUE(validate_hadamard(h)) << validate_hadamard(h).reason;
}

TEST(Parse, AcceptsPlusOneSpellings) {
  std::istringstream in("1 1\n+1 -1\n");
  EXPECT_EQ(parse_hadamard(in), sylvester(1));
}

TEST(Parse, RejectsGarbageAndNonHadamard) {
  std::istringstream bad("1 x\n1 -1\n");
  EXPECT_THROW(parse_hadamard(bad), ParameterError);
  std::istringstream ones("1 1\n1 1\n");
  EXPECT_THROW(parse_hadamard(ones), ParameterError);
}

TEST(Load, ReadsFileAndReportsMissing) {
  const auto path = std::filesystem::temp_directory_path() / "qpi_hadamard_test.txt";
  {
    std::ofstream out(path);
    for (const auto& row : kOrderFour) {
      for (int v : row) out << v << ' ';
      out << '\n';
    }
  }
  EXPECT_EQ(load_hadamard(path).rows(), kOrderFour);
  std::filesystem::remove(path);
  EXPECT_THROW(load_hadamard(path), ParameterError);
}

}  // namespace
}  // namespace qpi
