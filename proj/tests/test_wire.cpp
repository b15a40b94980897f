// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <bit>
#include <charconv>
#include <cstring>
#include <limits>

#include "qpi/scheme.hpp"
#include "qpi/scheme_approx.hpp"
#include "qpi/transcript_io.hpp"
#include "qpi/wire.hpp"
#include "support.hpp"

namespace qpi {
namespace {

using Code = wire::DecodeError::Code;
using Bytes = std::vector<std::uint8_t>;

wire::DecodeError::Code code_of(const Bytes& b, const wire::DecodeContext& ctx = {}) {
  try {
    wire::decode(b, ctx);
  } catch (const wire::DecodeError& e) {
    return e.code();
  }
  ADD_FAILURE() << "decode succeeded";
  return wire::DecodeError::Code::kTruncated;
}

TEST(Wire, QueryLayout) {
  const auto q = SignVector::from_signs({-1, 1, 1, 1, 1, -1});
  const Bytes b = wire::encode(wire::Query{q});
  EXPECT_EQ(b, (Bytes{1, 1, 1, 0, 0, 0, 0x21}));
}

TEST(Wire, AllPlusQueryIsZeroByte) {
  const Bytes b = wire::encode(wire::Query{SignVector(8)});
  ASSERT_EQ(b.size(), 7u);
  EXPECT_EQ(b[6], 0x00);
}

TEST(Wire, QueryPayloadLength) {
  for (std::size_t bits : {1, 6, 8, 9, 56, 4095}) {
    const Bytes b = wire::encode(wire::Query{SignVector(bits)});
    EXPECT_EQ(b.size() - wire::kHeaderBytes, (bits + 7) / 8);
  }
}

TEST(Wire, AnswerAndResultLayout) {
  const Bytes a = wire::encode(wire::Answer{{1.0, -2.5}});
  ASSERT_EQ(a.size(), 6u + 16u);
  EXPECT_EQ(a[0], 2);
  EXPECT_EQ(a[2], 16);
  double v = 0;
  std::memcpy(&v, a.data() + 14, 8);  // little-endian host
  EXPECT_EQ(v, -2.5);
  const Bytes r = wire::encode(wire::Result{0.0});
  EXPECT_EQ(r, (Bytes{3, 1, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(Wire, RandomRoundTrips) {
  auto rng = test::rng_for(61);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t bits = 1 + rng() % 200;
    const wire::Message q = wire::Query{test::random_signs(bits, rng)};
    ASSERT_EQ(wire::decode(wire::encode(q), {bits, std::nullopt}), q);
    std::vector<double> vals(rng() % 10);
    for (auto& x : vals) x = std::bit_cast<double>(rng() & 0x7fefffffffffffffULL);
    const wire::Message a = wire::Answer{vals};
    ASSERT_EQ(wire::decode(wire::encode(a), {std::nullopt, vals.size()}), a);
    const wire::Message r = wire::Result{std::bit_cast<double>(rng() & 0xffefffffffffffffULL)};
    ASSERT_EQ(wire::decode(wire::encode(r)), r);
  }
}

TEST(Wire, SpecialValuesSurviveBitExactly) {
  const double vals[] = {-0.0, std::numeric_limits<double>::infinity(), std::numeric_limits<double>::denorm_min()};
  for (double v : vals) {
    const auto m = wire::decode(wire::encode(wire::Result{v}));
    EXPECT_EQ(std::bit_cast<std::uint64_t>(std::get<wire::Result>(m).value), std::bit_cast<std::uint64_t>(v));
  }
}

TEST(Wire, DistinctErrors) {
  const Bytes good = wire::encode(wire::Query{SignVector::from_signs({-1, 1, -1, 1, 1, 1})});
  EXPECT_EQ(code_of(Bytes{1, 1, 1}), Code::kTruncated);
  EXPECT_EQ(code_of(Bytes(good.begin(), good.end() - 1)), Code::kTruncated);
  Bytes kind = good;
  kind[0] = 9;
  EXPECT_EQ(code_of(kind), Code::kUnknownKind);
  Bytes version = good;
  version[1] = 2;
  EXPECT_EQ(code_of(version), Code::kUnknownVersion);
  Bytes trailing = good;
  trailing.push_back(0);
  EXPECT_EQ(code_of(trailing), Code::kLengthMismatch);
  EXPECT_EQ(code_of(good, {12, std::nullopt}), Code::kLengthMismatch);
  Bytes padding = good;
  padding[6] |= 0x80;
  EXPECT_EQ(code_of(padding, {6, std::nullopt}), Code::kBadPadding);
  EXPECT_EQ(code_of(Bytes{2, 1, 3, 0, 0, 0, 1, 2, 3}), Code::kLengthMismatch);
  EXPECT_EQ(code_of(wire::encode(wire::Answer{{1.0}}), {std::nullopt, 2}), Code::kLengthMismatch);
  EXPECT_EQ(code_of(Bytes{3, 1, 4, 0, 0, 0, 1, 2, 3, 4}), Code::kLengthMismatch);
}

TEST(Wire, TranscriptFramesDecodeInSequence) {
  SchemeParams p;
  p.n = 16;
  p.t = 4;
  p.h = 2;
  const Scheme s(p);
  auto rng = test::rng_for(62);
  const auto tr = run_session(s, test::random_signs(16, rng), test::random_unit(16, rng), 3);
  const Bytes all = transcript_wire_bytes(tr);
  std::size_t used = 0, offset = 0;
  const std::span<const std::uint8_t> view(all);
  const auto q = wire::decode_prefix(view, {12, 4}, used);
  offset += used;
  const auto a = wire::decode_prefix(view.subspan(offset), {12, 4}, used);
  offset += used;
  const auto r = wire::decode(view.subspan(offset));
  EXPECT_EQ(std::get<wire::Query>(q).q, tr.query);
  EXPECT_EQ(std::get<wire::Answer>(a).values, tr.answers);
  EXPECT_EQ(std::get<wire::Result>(r).value, tr.estimate);
}

TEST(TranscriptIo, FormatDoubleRoundTrips) {
  auto rng = test::rng_for(63);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::bit_cast<double>(rng() & 0xffefffffffffffffULL);
    const std::string text = format_double(v);
    double back = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    ASSERT_EQ(back, v) << text;
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(3.0), "3");
}

}  // namespace
}  // namespace qpi
