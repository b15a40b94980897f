// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpi/hadamard.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "qpi/errors.hpp"

namespace qpi {

HadamardCheck validate_hadamard(const std::vector<std::vector<int>>& rows) {
  using Status = HadamardCheck::Status;
  const std::size_t t = rows.size();
  if (t == 0) return {Status::kEmpty, "matrix has no rows"};
  for (std::size_t i = 0; i < t; ++i) {
    if (rows[i].size() != t) {
      return {Status::kNotSquare, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                      " entries, expected " + std::to_string(t)};
    }
    for (std::size_t j = 0; j < t; ++j) {
      if (rows[i][j] != 1 && rows[i][j] != -1) {
        return {Status::kBadEntry, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                                       std::to_string(rows[i][j]) + ", expected +1 or -1"};
      }
    }
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t k = i; k < t; ++k) {
      std::int64_t dot = 0;
      for (std::size_t j = 0; j < t; ++j) dot += rows[i][j] * rows[k][j];
      const std::int64_t want = (i == k) ? static_cast<std::int64_t>(t) : 0;
      if (dot != want) {
        return {Status::kNotOrthogonal, "(L L^T)(" + std::to_string(i) + "," + std::to_string(k) +
                                            ") = " + std::to_string(dot) + ", expected " + std::to_string(want)};
      }
    }
  }
  return {};
}

HadamardMatrix HadamardMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const HadamardCheck check = validate_hadamard(rows);
  if (!check) throw ParameterError("not a Hadamard matrix: " + check.reason);
  const std::size_t t = rows.size();
  std::vector<int> entries;
  entries.reserve(t * t);
  for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());
  return HadamardMatrix(t, std::move(entries));
}

std::vector<std::vector<int>> HadamardMatrix::rows() const {
  std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

HadamardMatrix sylvester(unsigned k) {
  if (k > kMaxSylvesterExponent) {
    throw ParameterError("Sylvester exponent " + std::to_string(k) + " exceeds maximum " +
                         std::to_string(kMaxSylvesterExponent));
  }
  const std::size_t t = std::size_t{1} << k;
  // Closed form of the recursion: H(i, j) = (-1)^{popcount(i & j)}.
  std::vector<int> entries(t * t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) entries[i * t + j] = (std::popcount(i & j) & 1) ? -1 : 1;
  }
  return HadamardMatrix(t, std::move(entries));
}

HadamardMatrix sylvester_of_order(std::size_t t) {
  if (t == 0 || !std::has_single_bit(t)) {
    throw ParameterError("no Sylvester Hadamard matrix of order " + std::to_string(t) +
                         " (order must be a power of two); supply one with --hadamard");
  }
  return sylvester(static_cast<unsigned>(std::countr_zero(t)));
}

HadamardMatrix parse_hadamard(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      if (tok == "1" || tok == "+1") {
        row.push_back(1);
      } else if (tok == "-1") {
        row.push_back(-1);
      } else {
        throw ParameterError("hadamard file line " + std::to_string(line_no) + ": bad entry '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return HadamardMatrix::from_rows(rows);
}

HadamardMatrix load_hadamard(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open hadamard file " + path.string());
  return parse_hadamard(in);
}

}  // namespace qpi
