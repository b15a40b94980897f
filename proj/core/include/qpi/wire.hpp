// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

// Framing for the three protocol messages.
//
//   byte 0      kind (1 = QUERY, 2 = ANSWER, 3 = RESULT)
//   byte 1      version (kWireVersion)
//   bytes 2..5  payload length, unsigned little-endian
//   bytes 6..   payload
//
// QUERY payloads are the query signs bit-packed little-endian within each
// byte, -1 as a set bit, ceil(bits/8) bytes with zero padding. ANSWER
// payloads are t IEEE-754 binary64 values, RESULT payloads one such value,
// all little-endian.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qpi/gf2.hpp"

namespace qpi::wire {

inline constexpr std::uint8_t kWireVersion = 1;
inline constexpr std::size_t kHeaderBytes = 6;

enum class Kind : std::uint8_t { kQuery = 1, kAnswer = 2, kResult = 3 };

struct Query {
  SignVector q;
  friend bool operator==(const Query&, const Query&) = default;
};
struct Answer {
  std::vector<double> values;
  friend bool operator==(const Answer&, const Answer&) = default;
};
struct Result {
  double value = 0.0;
  friend bool operator==(const Result&, const Result&) = default;
};

using Message = std::variant<Query, Answer, Result>;

Kind kind_of(const Message& msg);

class DecodeError : public std::runtime_error {
 public:
  enum class Code { kTruncated, kUnknownKind, kUnknownVersion, kLengthMismatch, kBadPadding };

  DecodeError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

std::vector<std::uint8_t> encode(const Message& msg);

/// Decoding context. query_bits pins the QUERY length (n - t); without it
/// every payload bit is taken as a sign. answer_count pins t.
struct DecodeContext {
  std::optional<std::size_t> query_bits;
  std::optional<std::size_t> answer_count;
};

/// Decodes exactly one message occupying all of `bytes`.
Message decode(std::span<const std::uint8_t> bytes, const DecodeContext& ctx = {});

/// Decodes the message at the front of `bytes` and reports how many bytes it used.
Message decode_prefix(std::span<const std::uint8_t> bytes, const DecodeContext& ctx, std::size_t& consumed);

std::string to_hex(std::span<const std::uint8_t> bytes);

}  // namespace qpi::wire
