// Copyright 2026 The qpi Authors
// SPDX-License-Identifier: Apache-2.0

// Oracle-versus-closed-form checks at desk scale, as run by `qpi verify`.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qpi {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every check; exceptions inside a check count as failures.
std::vector<CheckResult> run_verification(std::uint64_t seed = 1);

/// Names of the checks run_verification performs, in order.
std::vector<std::string> verification_names();

}  // namespace qpi
