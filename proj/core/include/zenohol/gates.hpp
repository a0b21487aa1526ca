// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "zenohol/linalg.hpp"

namespace zenohol {

namespace pauli {
Eigen::Matrix2cd x();
Eigen::Matrix2cd y();
Eigen::Matrix2cd z();
}  // namespace pauli

/// U = exp(i global_phase) exp(-i angle/2 axis.sigma), angle in [0, 2 pi).
struct AxisAngle {
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  double angle = 0.0;
  double global_phase = 0.0;

  Eigen::Matrix2cd reconstruct() const;
};

/// Canonical decomposition. The zero-angle case reports axis z.
/// Throws InvalidArgument if |U^dag U - I| > 1e-8.
AxisAngle axis_angle(const Eigen::Matrix2cd& u);

/// For U in SU(2), U = cos(t) - i sin(t) axis.sigma: returns sin(t) * axis.
/// Smooth in U, so its components are usable as root-finding targets.
Eigen::Vector3d su2_vector(const Eigen::Matrix2cd& u);

struct BlochPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
  int seq_len = 0;
};

/// alpha |D1> + beta |D2>  ->  (2 Re a*b, 2 Im a*b, |a|^2 - |b|^2)
BlochPoint bloch_point(const Eigen::Vector2cd& state);

/// Apply random words over {U1, U2} to |D1>. Word lengths are uniform in
/// [1, max_len], letters i.i.d. uniform. Word i draws from its own generator
/// seeded by (seed, i), so the output depends only on (seed, count, max_len).
std::vector<BlochPoint> universality_sample(const Eigen::Matrix2cd& u1,
                                            const Eigen::Matrix2cd& u2, int max_len,
                                            int count, std::uint64_t seed);

/// Apply a fixed word (letters 0 -> U1, 1 -> U2, leftmost applied first).
BlochPoint apply_word(const Eigen::Matrix2cd& u1, const Eigen::Matrix2cd& u2,
                      const std::vector<int>& word);

/// Recursive zonal equal-area partition of the unit sphere into `cells`
/// regions: two polar caps and collars split evenly in longitude.
class EqualAreaPartition {
 public:
  explicit EqualAreaPartition(int cells);

  int size() const { return cells_; }
  int cell_of(double x, double y, double z) const;
  /// Colatitude boundaries, from 0 to pi.
  const std::vector<double>& boundaries() const { return boundaries_; }
  /// Regions per zone (caps included, one each).
  const std::vector<int>& zone_counts() const { return zone_counts_; }
  /// Area of cell `index` (all equal to 4 pi / cells up to rounding).
  double cell_area(int index) const;

 private:
  int cells_;
  std::vector<double> boundaries_;
  std::vector<int> zone_counts_;
  std::vector<int> zone_offsets_;
};

/// Fraction of the partition's cells holding at least one point.
double fill_fraction(const std::vector<BlochPoint>& points, const EqualAreaPartition& partition);

struct ThetaStarOptions {
  double tolerance = 1e-12;  ///< on theta
  int scan_points = 720;     ///< bracket scan resolution over (0, pi/2)
};

/// theta_1 in (0, pi/2) at which W(m_a, m_b; theta_1) rotates about the x
/// axis, from a bracketing root search on the closed-form W. Throws
/// NumericalError listing the scanned interval if no bracket exists.
double find_theta_star(int m_a, int m_b, const ThetaStarOptions& options = {});

struct XApproximation {
  int best_k = 0;
  double best_distance = 0.0;
  std::vector<double> distances;  ///< distances[k-1] = d(W^k, X)
};

/// Scan W^k for k = 1..max_reps and keep the power closest to Pauli X.
XApproximation approximate_x(const Eigen::Matrix2cd& w, int max_reps);
XApproximation approximate_x(double theta_star, int m_a, int m_b, int max_reps);

}  // namespace zenohol
