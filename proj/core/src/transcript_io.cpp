// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpi/transcript_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "qpi/wire.hpp"

namespace qpi {
namespace {

std::string sign_hex(const SignVector& v) {
  std::vector<std::uint8_t> bytes((v.size() + 7) / 8, 0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v.bit(j)) bytes[j / 8] |= static_cast<std::uint8_t>(1U << (j % 8));
  }
  return wire::to_hex(bytes);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::uint8_t> transcript_wire_bytes(const Transcript& tr) {
  std::vector<std::uint8_t> out = wire::encode(wire::Query{tr.query});
  const auto answer = wire::encode(wire::Answer{tr.answers});
  const auto result = wire::encode(wire::Result{tr.estimate});
  out.insert(out.end(), answer.begin(), answer.end());
  out.insert(out.end(), result.begin(), result.end());
  return out;
}

std::string transcript_to_json(const Transcript& tr) {
  // Hand-rolled so the number formatting is exactly format_double.
  std::ostringstream os;
  os << "{\n"
     << "  \"n\": " << tr.n << ",\n"
     << "  \"t\": " << tr.t << ",\n"
     << "  \"h\": " << tr.h << ",\n"
     << "  \"seed\": " << tr.seed << ",\n"
     << "  \"g\": \"" << sign_hex(tr.g) << "\",\n"
     << "  \"g_weight\": " << hamming_weight(tr.g) << ",\n"
     << "  \"query\": \"" << sign_hex(tr.query) << "\",\n"
     << "  \"query_bits\": " << tr.query.size() << ",\n"
     << "  \"shift\": \"" << sign_hex(tr.shift) << "\",\n"
     << "  \"answers\": [";
  for (std::size_t i = 0; i < tr.answers.size(); ++i) os << (i ? ", " : "") << format_double(tr.answers[i]);
  os << "],\n"
     << "  \"estimate\": " << format_double(tr.estimate);
  if (tr.truth) os << ",\n  \"truth\": " << format_double(*tr.truth);
  if (tr.bound) os << ",\n  \"bound\": " << format_double(*tr.bound);
  if (tr.truth && tr.bound) {
    os << ",\n  \"abs_error\": " << format_double(std::abs(tr.estimate - *tr.truth));
  }
  os << "\n}\n";
  return os.str();
}

}  // namespace qpi
