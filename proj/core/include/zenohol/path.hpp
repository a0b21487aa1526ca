// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file path.hpp
 * @brief Piecewise parameter-space paths and their text form.
 *
 * Grammar (segments in time order, whitespace ignored):
 *
 *     program := [ segment { ";" segment } ]
 *     segment := "theta:" angle "->" angle
 *              | "phi:ma=" int ",mb=" int "@theta=" angle
 *     angle   := number | [number ["*"]] "pi" ["/" number]
 *
 * `theta:a->b` ramps theta from a to b at zero phases. `phi:ma=..,mb=..@theta=t`
 * winds phi_a and phi_b simultaneously from 0 to 2 pi m_a and 2 pi m_b at
 * fixed theta t. Consecutive segments must share their theta endpoint.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zenohol/model.hpp"

namespace zenohol {

/// theta ramp at phi_a = phi_b = 0. Endpoints in [0, pi/2].
struct ThetaRamp {
  double from = 0.0;
  double to = 0.0;
};

/// Phase loop at fixed theta with integer windings.
struct PhiLoop {
  int m_a = 0;
  int m_b = 0;
  double theta = 0.0;
};

using PathSegment = std::variant<ThetaRamp, PhiLoop>;

double start_theta(const PathSegment& seg);
double end_theta(const PathSegment& seg);
/// Drive parameters at ramp fraction s in [0, 1].
ControlParams segment_params(const PathSegment& seg, double s, double omega = 1.0);
/// |delta theta| for ramps, 2 pi (|m_a| + |m_b|) for loops.
double parameter_arc(const PathSegment& seg);
/// Same segment traversed backwards.
PathSegment reversed(const PathSegment& seg);

class PathProgram {
 public:
  PathProgram() = default;
  /// Validates ranges and continuity; throws ParseError naming the segment.
  explicit PathProgram(std::vector<PathSegment> segments);

  const std::vector<PathSegment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  std::size_t size() const { return segments_.size(); }

  std::optional<double> start_theta() const;
  std::optional<double> end_theta() const;

  /// Whole path traversed backwards.
  PathProgram reversed() const;
  /// Concatenation; continuity is re-checked.
  PathProgram then(const PathProgram& next) const;

 private:
  std::vector<PathSegment> segments_;
};

/// Continuity tolerance on shared theta endpoints.
inline constexpr double kContinuityTolerance = 1e-9;

PathProgram parse_path(std::string_view text);

/// Text form accepted by parse_path(); numbers use shortest round-trip form.
std::string format_path(const PathProgram& program);

/// theta ramp th0 -> th1
PathProgram theta_path(double from, double to);
/// Single phase loop
PathProgram phi_path(int m_a, int m_b, double theta);
/// pi/4 -> theta_1, loop (m_a, m_b), theta_1 -> pi/4
PathProgram w_path(int m_a, int m_b, double theta_1);
/// 0 -> theta_1, loop (m_a, m_b), theta_1 -> pi/4
PathProgram w_prime_path(int m_a, int m_b, double theta_1);

}  // namespace zenohol
