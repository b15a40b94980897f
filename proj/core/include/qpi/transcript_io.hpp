// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpi/scheme_approx.hpp"

namespace qpi {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

/// QUERY, ANSWER and RESULT frames of a session, concatenated.
std::vector<std::uint8_t> transcript_wire_bytes(const Transcript& tr);

/// Stable JSON rendering (fixed key order, round-trip doubles, signs as hex
/// of the packed wire bytes).
std::string transcript_to_json(const Transcript& tr);

}  // namespace qpi
