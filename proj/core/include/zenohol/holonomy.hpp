// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file holonomy.hpp
 * @brief Non-Abelian holonomies on the dark subspace.
 *
 * U maps dark-frame coordinates at the start of a path to dark-frame
 * coordinates at its end: a state sum_j c_j |eta_j(start)> is carried to
 * sum_i (U c)_i |eta_i(end)>, with eta the gauge-fixed frame. This equals the
 * path-ordered exp(-int A) with A_ij = <eta_i| d eta_j>.
 *
 * Two routes are provided: discrete parallel transport (any sector) and the
 * closed forms for (n, p) = (4, 2). Closed-form matrices are returned in the
 * ordered basis (D1, D2). An empty path gives the identity on the dark frame
 * at theta = pi/4.
 */

#pragma once

#include <cstdint>

#include "zenohol/path.hpp"
#include "zenohol/subspace.hpp"

namespace zenohol {

struct HolonomyResult {
  CMatrix u;
  Frame frame_in;
  Frame frame_out;
  std::int64_t steps_used = 0;
  double est_error = 0.0;
};

struct TransportOptions {
  int initial_steps = 256;        ///< per segment
  int max_steps = 1 << 16;        ///< per segment
  double tolerance = 1e-8;        ///< projective distance between refinements
  double omega = 1.0;
};

/// Discrete parallel transport along `path`.
///
/// Each segment is sampled uniformly in its ramp parameter; the dark frame at
/// each sample is aligned to the running frame by the unitary polar factor of
/// their overlap. The result of N and 2N samples is combined by Richardson
/// extrapolation (the scheme is second order) and N is doubled until two
/// successive extrapolations agree to `tolerance`.
///
/// Throws NumericalError if the dark dimension changes along the path (the
/// message names segment and step) or if `max_steps` is reached first.
HolonomyResult transport(const PathProgram& path, const ModelConfig& config,
                         const TransportOptions& options = {});

/// Same, reusing a prepared solver.
HolonomyResult transport(const PathProgram& path, const DarkSolver& solver,
                         const TransportOptions& options = {});

struct ClosedFormCoeffs {
  double c_x = 0.0;
  double c_y = 0.0;
  double c_z = 0.0;
};

/// -arctan sqrt((19 - 5 cos 4 theta) / 6), principal branch.
double theta_coefficient(double theta);

/// Rotation coefficients of a phase loop (c_y = 0).
ClosedFormCoeffs phi_loop_coefficients(int m_a, int m_b, double theta);

/// Holonomy of a theta ramp from `theta_from` to `theta_to`.
Eigen::Matrix2cd closed_form_theta(double theta_to, double theta_from);

/// Holonomy of a phase loop.
Eigen::Matrix2cd closed_form_phi(int m_a, int m_b, double theta);

/// Closed-form holonomy of a whole path. Throws InvalidArgument unless the
/// sector is (4, 2).
HolonomyResult closed_form(const PathProgram& path, const ModelConfig& config);

enum class HolonomyMethod { transport, closed_form };

/// U(C_theta(pi/4, theta_1)) U(C_phi(m_a, m_b; theta_1)) U(C_theta(theta_1, pi/4))
HolonomyResult compose_w(int m_a, int m_b, double theta_1, HolonomyMethod method,
                         const ModelConfig& config = {});
/// As compose_w but starting from theta = 0.
HolonomyResult compose_w_prime(int m_a, int m_b, double theta_1, HolonomyMethod method,
                               const ModelConfig& config = {});

/// Closed-form W matrix alone (cheap, for root finding and scans).
Eigen::Matrix2cd closed_form_w(int m_a, int m_b, double theta_1);
Eigen::Matrix2cd closed_form_w_prime(int m_a, int m_b, double theta_1);

}  // namespace zenohol
