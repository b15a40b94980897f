// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpi/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qpi/errors.hpp"

namespace qpi {
namespace {

std::size_t word_count(std::size_t n) { return (n + SignVector::kWordBits - 1) / SignVector::kWordBits; }

// Number of set bits in [lo, hi).
std::size_t count_range(std::span<const SignVector::Word> words, std::size_t lo, std::size_t hi) {
  constexpr std::size_t kBits = SignVector::kWordBits;
  std::size_t count = 0;
  while (lo < hi) {
    const std::size_t w = lo / kBits;
    const std::size_t off = lo % kBits;
    const std::size_t take = std::min(kBits - off, hi - lo);
    SignVector::Word chunk = words[w] >> off;
    if (take < kBits) chunk &= (SignVector::Word{1} << take) - 1;
    count += static_cast<std::size_t>(std::popcount(chunk));
    lo += take;
  }
  return count;
}

}  // namespace

SignVector::SignVector(std::size_t n) : size_(n), words_(word_count(n), 0) {}

SignVector SignVector::from_signs(std::span<const int> signs) {
  SignVector v(signs.size());
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (signs[j] == -1) {
      v.set_bit(j, true);
    } else if (signs[j] != 1) {
      throw ParameterError("sign vector entry " + std::to_string(j) + " is " +
                           std::to_string(signs[j]) + ", expected +1 or -1");
    }
  }
  return v;
}

SignVector SignVector::from_signs(std::initializer_list<int> signs) {
  return from_signs(std::span<const int>(signs.begin(), signs.size()));
}

SignVector SignVector::from_words(std::size_t n, std::span<const Word> words) {
  require_length("SignVector::from_words word count", word_count(n), words.size());
  SignVector v(n);
  std::copy(words.begin(), words.end(), v.words_.begin());
  if (n % kWordBits != 0 && !v.words_.empty()) {
    const Word pad = ~((Word{1} << (n % kWordBits)) - 1);
    if (v.words_.back() & pad) throw ParameterError("SignVector::from_words: padding bits set");
  }
  return v;
}

SignVector SignVector::indicator(std::size_t n, std::size_t first, std::size_t last) {
  SignVector v(n);
  for (std::size_t j = first; j < last; ++j) v.set_bit(j, true);
  return v;
}

void SignVector::set_bit(std::size_t j, bool one) noexcept {
  const Word mask = Word{1} << (j % kWordBits);
  if (one) {
    words_[j / kWordBits] |= mask;
  } else {
    words_[j / kWordBits] &= ~mask;
  }
}

std::vector<int> SignVector::to_signs() const {
  std::vector<int> out(size_);
  for (std::size_t j = 0; j < size_; ++j) out[j] = (*this)[j];
  return out;
}

double SignVector::dot(std::span<const double> x) const {
  require_length("SignVector::dot", size_, x.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < size_; ++j) acc += bit(j) ? -x[j] : x[j];
  return acc;
}

SignVector& SignVector::operator^=(const SignVector& other) {
  require_length("oplus", size_, other.size_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

SignVector oplus(const SignVector& a, const SignVector& b) {
  SignVector out = a;
  out ^= b;
  return out;
}

std::size_t hamming_weight(const SignVector& a) {
  std::size_t count = 0;
  for (auto w : a.words()) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::size_t hamming_distance(const SignVector& a, const SignVector& b) {
  require_length("hamming_distance", a.size(), b.size());
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t count = 0;
  for (std::size_t w = 0; w < wa.size(); ++w) count += static_cast<std::size_t>(std::popcount(wa[w] ^ wb[w]));
  return count;
}

BlockPartition::BlockPartition(std::size_t n, std::size_t t) : n_(n), t_(t) {
  if (t == 0 || n == 0) throw ParameterError("partition needs n >= 1 and t >= 1");
  if (n % t != 0) {
    throw ParameterError("t = " + std::to_string(t) + " does not divide n = " + std::to_string(n));
  }
}

SignVector BlockPartition::indicator(std::size_t r) const {
  return SignVector::indicator(n_, block_begin(r), block_end(r));
}

bool BlockPartition::in_subspace(const SignVector& v) const {
  require_length("BlockPartition::in_subspace", n_, v.size());
  const std::size_t b = block_size();
  for (std::size_t r = 0; r < t_; ++r) {
    const std::size_t weight = count_range(v.words(), block_begin(r), block_end(r));
    if (weight != 0 && weight != b) return false;
  }
  return true;
}

std::vector<std::size_t> block_weights(const SignVector& a, const BlockPartition& p) {
  require_length("block_weights", p.n(), a.size());
  std::vector<std::size_t> out(p.t());
  for (std::size_t r = 0; r < p.t(); ++r) out[r] = count_range(a.words(), p.block_begin(r), p.block_end(r));
  return out;
}

SyndromeMatrix::SyndromeMatrix(const BlockPartition& p) : partition_(p), row_index_(p.n(), -1) {
  checked_.reserve(p.n() - p.t());
  anchor_.reserve(p.n() - p.t());
  for (std::size_t r = 0; r < p.t(); ++r) {
    const std::size_t rep = p.representative(r);
    for (std::size_t j = rep + 1; j < p.block_end(r); ++j) {
      row_index_[j] = static_cast<std::ptrdiff_t>(checked_.size());
      checked_.push_back(j);
      anchor_.push_back(rep);
    }
  }
}

SignVector SyndromeMatrix::row(std::size_t k) const {
  SignVector v(n());
  v.set_bit(checked_[k], true);
  v.set_bit(anchor_[k], true);
  return v;
}

SyndromeMatrix syndrome_matrix(const BlockPartition& p) { return SyndromeMatrix(p); }

SignVector syndrome(const SyndromeMatrix& m, const SignVector& v) {
  require_length("syndrome", m.n(), v.size());
  SignVector q(m.rows());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    q.set_bit(k, v.bit(m.checked_index(k)) != v.bit(m.anchor_index(k)));
  }
  return q;
}

SignVector solve_syndrome(const SyndromeMatrix& m, const SignVector& q) {
  require_length("solve_syndrome", m.rows(), q.size());
  SignVector u(m.n());
  for (std::size_t k = 0; k < m.rows(); ++k) u.set_bit(m.checked_index(k), q.bit(k));
  return u;
}

}  // namespace qpi
