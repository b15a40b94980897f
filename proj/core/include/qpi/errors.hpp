// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpi {

/// Invalid scheme or analysis parameters (t does not divide n, h > n/2, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two operands that must share a length do not.
class LengthMismatch : public std::invalid_argument {
 public:
  LengthMismatch(const std::string& what, std::size_t expected, std::size_t got)
      : std::invalid_argument(what + ": expected length " + std::to_string(expected) +
                              ", got " + std::to_string(got)),
        expected_(expected),
        got_(got) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t got() const noexcept { return got_; }

 private:
  std::size_t expected_;
  std::size_t got_;
};

/// w and u do not lie in the same coset of V; the caller passed the wrong shift.
class CosetMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A perturbation handed to the server is not a member of the configured Gamma set.
class GammaViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration oracle was asked for a size beyond its cap.
class OracleLimit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_length(const char* what, std::size_t expected, std::size_t got) {
  if (expected != got) throw LengthMismatch(what, expected, got);
}

}  // namespace qpi
