// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace qpi {

/// Largest Sylvester exponent we construct (order 4096).
inline constexpr unsigned kMaxSylvesterExponent = 12;

/// Outcome of checking a candidate matrix against L L^T = t I.
struct HadamardCheck {
  enum class Status { kAccepted, kEmpty, kNotSquare, kBadEntry, kNotOrthogonal };

  Status status = Status::kAccepted;
  std::string reason;

  bool accepted() const noexcept { return status == Status::kAccepted; }
  explicit operator bool() const noexcept { return accepted(); }
};

/// Exact integer check of L L^T = t I over a dense +-1 candidate.
HadamardCheck validate_hadamard(const std::vector<std::vector<int>>& rows);

/// Real +-1 matrix L of order t with L L^T = t I.
class HadamardMatrix {
 public:
  /// Throws ParameterError carrying the rejection reason.
  static HadamardMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t order() const noexcept { return order_; }
  int operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * order_ + j]; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

 private:
  HadamardMatrix(std::size_t order, std::vector<int> entries)
      : order_(order), entries_(std::move(entries)) {}
  friend HadamardMatrix sylvester(unsigned k);

  std::size_t order_ = 0;
  std::vector<int> entries_;
};

/// H_0 = [1], H_k = [[H, H], [H, -H]].
HadamardMatrix sylvester(unsigned k);

/// Sylvester matrix of order t; t must be a power of two.
HadamardMatrix sylvester_of_order(std::size_t t);

/// Text format: t lines of t whitespace-separated entries from {+1, -1, 1}.
HadamardMatrix parse_hadamard(std::istream& in);
HadamardMatrix load_hadamard(const std::filesystem::path& path);

}  // namespace qpi
