// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>
#include <random>

#include "zenohol/model.hpp"

namespace zenohol::testing {

/// Generic drive: theta away from the corners, arbitrary phases.
inline ControlParams random_params(std::mt19937_64& rng, double omega = 1.0) {
  std::uniform_real_distribution<double> theta(0.1, std::numbers::pi / 2 - 0.1);
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  return ControlParams{omega, theta(rng), phase(rng), phase(rng)};
}

inline double random_g(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(1.0, 50.0)(rng);
}

}  // namespace zenohol::testing
