// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

// Boolean algebra over F2 in its {+1,-1} representation.
//
// -1 stands for Boolean one and +1 for Boolean zero, so F2 addition is the
// real product of two signs. Vectors are bit-packed little-endian into
// 64-bit words with a set bit meaning -1; padding bits past size() are
// always clear.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qpi {

class SignVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  SignVector() = default;
  /// All +1 vector of length n.
  explicit SignVector(std::size_t n);

  /// Builds from explicit signs; every entry must be +1 or -1.
  static SignVector from_signs(std::span<const int> signs);
  static SignVector from_signs(std::initializer_list<int> signs);
  /// Builds from packed words. Bits past n must be clear.
  static SignVector from_words(std::size_t n, std::span<const Word> words);
  /// Characteristic vector 1_S of the half-open index range [first, last).
  static SignVector indicator(std::size_t n, std::size_t first, std::size_t last);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Boolean value at j (true means the entry is -1).
  bool bit(std::size_t j) const noexcept { return (words_[j / kWordBits] >> (j % kWordBits)) & 1U; }
  /// Real value at j, either +1 or -1.
  int operator[](std::size_t j) const noexcept { return bit(j) ? -1 : 1; }

  void set_bit(std::size_t j, bool one) noexcept;
  void flip(std::size_t j) noexcept { words_[j / kWordBits] ^= Word{1} << (j % kWordBits); }

  std::span<const Word> words() const noexcept { return words_; }
  std::vector<int> to_signs() const;

  /// Real inner product with x (same length).
  double dot(std::span<const double> x) const;

  SignVector& operator^=(const SignVector& other);
  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// a (+) b: entrywise product of signs.
SignVector oplus(const SignVector& a, const SignVector& b);
inline SignVector operator^(const SignVector& a, const SignVector& b) { return oplus(a, b); }

/// Number of -1 entries.
std::size_t hamming_weight(const SignVector& a);
/// Number of positions where a and b differ.
std::size_t hamming_distance(const SignVector& a, const SignVector& b);

/// Canonical partition of [0, n) into t contiguous blocks of n/t indices each.
class BlockPartition {
 public:
  BlockPartition(std::size_t n, std::size_t t);

  std::size_t n() const noexcept { return n_; }
  std::size_t t() const noexcept { return t_; }
  std::size_t block_size() const noexcept { return n_ / t_; }
  std::size_t block_of(std::size_t j) const noexcept { return j / block_size(); }
  std::size_t block_begin(std::size_t r) const noexcept { return r * block_size(); }
  std::size_t block_end(std::size_t r) const noexcept { return (r + 1) * block_size(); }
  /// Smallest index of block r; the anchor for that block's parity checks.
  std::size_t representative(std::size_t r) const noexcept { return block_begin(r); }

  /// Characteristic vector 1_{S_r}.
  SignVector indicator(std::size_t r) const;
  /// True iff v is constant on every block, i.e. v lies in V = span{1_{S_r}}.
  bool in_subspace(const SignVector& v) const;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  std::size_t n_;
  std::size_t t_;
};

/// Per-block Hamming weights w_H(a|_{S_r}), r = 0..t-1.
std::vector<std::size_t> block_weights(const SignVector& a, const BlockPartition& p);

/// Parity-check matrix with right kernel V.
///
/// Row k checks x_j (+) x_rep for the k-th non-representative index j in
/// ascending order, where rep is the first index of j's block. That gives
/// exactly n - t rows of weight two.
class SyndromeMatrix {
 public:
  explicit SyndromeMatrix(const BlockPartition& p);

  std::size_t n() const noexcept { return partition_.n(); }
  std::size_t t() const noexcept { return partition_.t(); }
  std::size_t rows() const noexcept { return checked_.size(); }
  const BlockPartition& partition() const noexcept { return partition_; }

  /// Row k as a sign vector (-1 at the two checked positions).
  SignVector row(std::size_t k) const;
  /// Checked coordinate and its block anchor for row k.
  std::size_t checked_index(std::size_t k) const noexcept { return checked_[k]; }
  std::size_t anchor_index(std::size_t k) const noexcept { return anchor_[k]; }
  /// Row of coordinate j, or -1 when j is a block representative.
  std::ptrdiff_t row_of(std::size_t j) const noexcept { return row_index_[j]; }

 private:
  BlockPartition partition_;
  std::vector<std::size_t> checked_;
  std::vector<std::size_t> anchor_;
  std::vector<std::ptrdiff_t> row_index_;
};

SyndromeMatrix syndrome_matrix(const BlockPartition& p);

/// M (.) v^T, a sign vector of length n - t.
SignVector syndrome(const SyndromeMatrix& m, const SignVector& v);

/// Canonical solution u of M (.) u^T = q: +1 at every block representative,
/// q's entry at every checked coordinate.
SignVector solve_syndrome(const SyndromeMatrix& m, const SignVector& q);

}  // namespace qpi
