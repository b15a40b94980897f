// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpi/wire.hpp"

#include <bit>
#include <cstring>

namespace qpi::wire {
namespace {

using Code = DecodeError::Code;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

double get_f64(const std::uint8_t* p) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

std::vector<std::uint8_t> pack_signs(const SignVector& q) {
  std::vector<std::uint8_t> bytes((q.size() + 7) / 8, 0);
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q.bit(j)) bytes[j / 8] |= static_cast<std::uint8_t>(1U << (j % 8));
  }
  return bytes;
}

}  // namespace

Kind kind_of(const Message& msg) {
  switch (msg.index()) {
    case 0:
      return Kind::kQuery;
    case 1:
      return Kind::kAnswer;
    default:
      return Kind::kResult;
  }
}

std::vector<std::uint8_t> encode(const Message& msg) {
  std::vector<std::uint8_t> payload;
  if (const auto* q = std::get_if<Query>(&msg)) {
    payload = pack_signs(q->q);
  } else if (const auto* a = std::get_if<Answer>(&msg)) {
    for (double v : a->values) put_f64(payload, v);
  } else {
    put_f64(payload, std::get<Result>(msg).value);
  }
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderBytes + payload.size());
  out.push_back(static_cast<std::uint8_t>(kind_of(msg)));
  out.push_back(kWireVersion);
  put_u32(out, static_cast<std::uint32_t>(payload.size()));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Message decode_prefix(std::span<const std::uint8_t> bytes, const DecodeContext& ctx, std::size_t& consumed) {
  if (bytes.size() < kHeaderBytes) {
    throw DecodeError(Code::kTruncated, "wire: " + std::to_string(bytes.size()) + " bytes is shorter than the header");
  }
  const std::uint8_t kind = bytes[0];
  if (kind < 1 || kind > 3) throw DecodeError(Code::kUnknownKind, "wire: unknown message kind " + std::to_string(kind));
  if (bytes[1] != kWireVersion) {
    throw DecodeError(Code::kUnknownVersion, "wire: unsupported version " + std::to_string(bytes[1]));
  }
  std::uint32_t len = 0;
  for (int i = 0; i < 4; ++i) len |= static_cast<std::uint32_t>(bytes[2 + i]) << (8 * i);
  if (bytes.size() - kHeaderBytes < len) {
    throw DecodeError(Code::kTruncated, "wire: payload declares " + std::to_string(len) + " bytes, " +
                                            std::to_string(bytes.size() - kHeaderBytes) + " available");
  }
  const std::uint8_t* p = bytes.data() + kHeaderBytes;
  consumed = kHeaderBytes + len;

  switch (static_cast<Kind>(kind)) {
    case Kind::kQuery: {
      const std::size_t bits = ctx.query_bits.value_or(8 * static_cast<std::size_t>(len));
      if ((bits + 7) / 8 != len) {
        throw DecodeError(Code::kLengthMismatch, "wire: QUERY of " + std::to_string(bits) + " bits needs " +
                                                     std::to_string((bits + 7) / 8) + " bytes, got " +
                                                     std::to_string(len));
      }
      SignVector q(bits);
      for (std::size_t j = 0; j < 8 * static_cast<std::size_t>(len); ++j) {
        const bool one = (p[j / 8] >> (j % 8)) & 1U;
        if (j < bits) {
          q.set_bit(j, one);
        } else if (one) {
          throw DecodeError(Code::kBadPadding, "wire: QUERY padding bit " + std::to_string(j) + " is set");
        }
      }
      return Query{std::move(q)};
    }
    case Kind::kAnswer: {
      if (len % 8 != 0) {
        throw DecodeError(Code::kLengthMismatch, "wire: ANSWER payload " + std::to_string(len) +
                                                     " is not a multiple of 8");
      }
      const std::size_t count = len / 8;
      if (ctx.answer_count && *ctx.answer_count != count) {
        throw DecodeError(Code::kLengthMismatch, "wire: ANSWER carries " + std::to_string(count) +
                                                     " values, expected " + std::to_string(*ctx.answer_count));
      }
      Answer a;
      a.values.reserve(count);
      for (std::size_t i = 0; i < count; ++i) a.values.push_back(get_f64(p + 8 * i));
      return a;
    }
    case Kind::kResult:
      if (len != 8) {
        throw DecodeError(Code::kLengthMismatch, "wire: RESULT payload must be 8 bytes, got " + std::to_string(len));
      }
      return Result{get_f64(p)};
  }
  throw DecodeError(Code::kUnknownKind, "wire: unknown message kind");
}

Message decode(std::span<const std::uint8_t> bytes, const DecodeContext& ctx) {
  std::size_t consumed = 0;
  Message msg = decode_prefix(bytes, ctx, consumed);
  if (consumed != bytes.size()) {
    throw DecodeError(Code::kLengthMismatch, "wire: " + std::to_string(bytes.size() - consumed) +
                                                 " trailing bytes after message");
  }
  return msg;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

}  // namespace qpi::wire
