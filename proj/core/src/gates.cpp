// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include "zenohol/gates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <unordered_set>

#include <boost/math/tools/toms748_solve.hpp>

#include "zenohol/errors.hpp"
#include "zenohol/holonomy.hpp"

namespace zenohol {

namespace pauli {
Eigen::Matrix2cd x() { return (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(); }
Eigen::Matrix2cd y() { return (Eigen::Matrix2cd() << 0, -kI, kI, 0).finished(); }
Eigen::Matrix2cd z() { return (Eigen::Matrix2cd() << 1, 0, 0, -1).finished(); }
}  // namespace pauli

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kUnitarityTolerance = 1e-8;
constexpr double kAxisFloor = 1e-12;

double wrap_phase(double a) {
  a = std::remainder(a, kTwoPi);
  return a <= -std::numbers::pi ? a + kTwoPi : a;
}

// sin(t) * axis for the SU(2) part u / sqrt(det u), and cos(t).
std::pair<Eigen::Vector3d, double> su2_parts(const Eigen::Matrix2cd& u, double phase) {
  const Eigen::Matrix2cd v = u * std::exp(-kI * phase);
  Eigen::Vector3d s;
  s.x() = (0.5 * kI * (v * pauli::x()).trace()).real();
  s.y() = (0.5 * kI * (v * pauli::y()).trace()).real();
  s.z() = (0.5 * kI * (v * pauli::z()).trace()).real();
  return {s, 0.5 * v.trace().real()};
}

}  // namespace

Eigen::Matrix2cd AxisAngle::reconstruct() const {
  const Eigen::Matrix2cd n = axis.x() * pauli::x() + axis.y() * pauli::y() + axis.z() * pauli::z();
  const Eigen::Matrix2cd rot =
      std::cos(angle / 2) * Eigen::Matrix2cd::Identity() - kI * std::sin(angle / 2) * n;
  return std::exp(kI * global_phase) * rot;
}

AxisAngle axis_angle(const Eigen::Matrix2cd& u) {
  const double defect = (u.adjoint() * u - Eigen::Matrix2cd::Identity()).norm();
  if (!(defect <= kUnitarityTolerance)) {
    throw InvalidArgument("axis_angle needs a unitary matrix (|U^dag U - I| = " +
                          message_number(defect) + ")");
  }
  double phase = 0.5 * std::arg(u.determinant());
  auto [s, c] = su2_parts(u, phase);
  double half = std::atan2(s.norm(), c);  // in [0, pi]
  AxisAngle out;
  if (half >= std::numbers::pi - 1e-15 && s.norm() < kAxisFloor) {
    // -I: absorb the sign in the phase.
    phase += std::numbers::pi;
    half = 0.0;
  }
  out.global_phase = wrap_phase(phase);
  if (s.norm() < kAxisFloor || half == 0.0) {
    out.axis = Eigen::Vector3d::UnitZ();
    out.angle = 0.0;
    return out;
  }
  out.axis = s / s.norm();
  out.angle = 2.0 * half;
  return out;
}

Eigen::Vector3d su2_vector(const Eigen::Matrix2cd& u) {
  return su2_parts(u, 0.5 * std::arg(u.determinant())).first;
}

BlochPoint bloch_point(const Eigen::Vector2cd& state) {
  const double norm2 = state.squaredNorm();
  if (!(norm2 > 0.0)) throw InvalidArgument("bloch_point needs a non-zero state");
  const Complex a = state(0);
  const Complex b = state(1);
  const Complex ab = std::conj(a) * b / norm2;
  BlochPoint p;
  p.x = 2.0 * ab.real();
  p.y = 2.0 * ab.imag();
  p.z = (std::norm(a) - std::norm(b)) / norm2;
  return p;
}

BlochPoint apply_word(const Eigen::Matrix2cd& u1, const Eigen::Matrix2cd& u2,
                      const std::vector<int>& word) {
  Eigen::Vector2cd psi(1.0, 0.0);
  for (int letter : word) psi = (letter == 0 ? u1 : u2) * psi;
  BlochPoint p = bloch_point(psi);
  p.seq_len = static_cast<int>(word.size());
  return p;
}

std::vector<BlochPoint> universality_sample(const Eigen::Matrix2cd& u1,
                                            const Eigen::Matrix2cd& u2, int max_len,
                                            int count, std::uint64_t seed) {
  if (count < 1) throw InvalidArgument("universality_sample needs count >= 1");
  if (max_len < 0) throw InvalidArgument("universality_sample needs max_len >= 0");
  std::vector<BlochPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> word;
  for (int i = 0; i < count; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    const int len = max_len == 0 ? 0 : std::uniform_int_distribution<int>(1, max_len)(rng);
    std::bernoulli_distribution coin(0.5);
    word.resize(static_cast<std::size_t>(len));
    for (auto& letter : word) letter = coin(rng) ? 1 : 0;
    out.push_back(apply_word(u1, u2, word));
  }
  return out;
}

EqualAreaPartition::EqualAreaPartition(int cells) : cells_(cells) {
  if (cells < 1) throw InvalidArgument("equal-area partition needs at least one cell");
  const double n = cells;
  boundaries_ = {0.0};
  if (cells == 1) {
    zone_counts_ = {1};
  } else if (cells == 2) {
    zone_counts_ = {1, 1};
    boundaries_.push_back(std::numbers::pi / 2);
  } else {
    const double area = 4.0 * std::numbers::pi / n;
    const double cap = std::acos(1.0 - 2.0 / n);
    const double ideal = std::sqrt(area);
    const int collars = std::max(1, static_cast<int>(std::lround((std::numbers::pi - 2 * cap) / ideal)));
    const double fitted = (std::numbers::pi - 2 * cap) / collars;
    zone_counts_.push_back(1);
    double carry = 0.0;
    for (int i = 0; i < collars; ++i) {
      const double a = cap + i * fitted;
      const double b = a + fitted;
      const double ideal_count = 2 * std::numbers::pi * (std::cos(a) - std::cos(b)) / area;
      const int m = static_cast<int>(std::lround(ideal_count + carry));
      carry += ideal_count - m;
      zone_counts_.push_back(m);
    }
    zone_counts_.push_back(1);
    // Drop empty collars produced by rounding.
    zone_counts_.erase(std::remove(zone_counts_.begin(), zone_counts_.end(), 0), zone_counts_.end());
    int cumulative = 0;
    for (std::size_t z = 0; z + 1 < zone_counts_.size(); ++z) {
      cumulative += zone_counts_[z];
      boundaries_.push_back(std::acos(std::clamp(1.0 - 2.0 * cumulative / n, -1.0, 1.0)));
    }
  }
  boundaries_.push_back(std::numbers::pi);
  int offset = 0;
  for (int m : zone_counts_) {
    zone_offsets_.push_back(offset);
    offset += m;
  }
  if (offset != cells_) throw NumericalError("equal-area partition rounding lost cells");
}

int EqualAreaPartition::cell_of(double x, double y, double z) const {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (!(r > 0.0)) throw InvalidArgument("cell_of needs a non-zero vector");
  const double colat = std::acos(std::clamp(z / r, -1.0, 1.0));
  auto it = std::upper_bound(boundaries_.begin() + 1, boundaries_.end() - 1, colat);
  const auto zone = static_cast<std::size_t>(it - (boundaries_.begin() + 1));
  const int m = zone_counts_[zone];
  const double lon = std::atan2(y, x) + std::numbers::pi;  // [0, 2 pi]
  const int k = std::min(m - 1, static_cast<int>(lon / kTwoPi * m));
  return zone_offsets_[zone] + k;
}

double EqualAreaPartition::cell_area(int index) const {
  if (index < 0 || index >= cells_) throw InvalidArgument("cell index out of range");
  const auto it = std::upper_bound(zone_offsets_.begin(), zone_offsets_.end(), index);
  const auto zone = static_cast<std::size_t>(it - zone_offsets_.begin() - 1);
  return kTwoPi * (std::cos(boundaries_[zone]) - std::cos(boundaries_[zone + 1])) / zone_counts_[zone];
}

double fill_fraction(const std::vector<BlochPoint>& points, const EqualAreaPartition& partition) {
  std::unordered_set<int> hit;
  for (const auto& p : points) hit.insert(partition.cell_of(p.x, p.y, p.z));
  return static_cast<double>(hit.size()) / partition.size();
}

double find_theta_star(int m_a, int m_b, const ThetaStarOptions& options) {
  if (options.scan_points < 2) throw InvalidArgument("theta* scan needs at least 2 points");
  if (!(options.tolerance > 0.0)) throw InvalidArgument("theta* tolerance must be positive");
  auto vec = [&](double t) { return su2_vector(closed_form_w(m_a, m_b, t)); };
  auto f = [&](double t) { return vec(t).z(); };
  const double h = (std::numbers::pi / 2) / options.scan_points;
  double lo = h;
  double flo = f(lo);
  for (int i = 2; i < options.scan_points; ++i) {
    const double hi = i * h;
    const double fhi = f(hi);
    if (flo == 0.0 || (flo < 0.0) != (fhi < 0.0)) {
      std::uintmax_t iters = 200;
      auto tol = [&](double a, double b) { return std::abs(b - a) <= options.tolerance; };
      double root = lo;
      if (flo != 0.0) {
        const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
        root = 0.5 * (r.first + r.second);
      }
      // Sign changes through U = +-I carry no rotation axis; skip them.
      if (vec(root).head<2>().norm() > 1e-6) return root;
    }
    lo = hi;
    flo = fhi;
  }
  throw NumericalError("no x-axis bracket for W(" + std::to_string(m_a) + ", " + std::to_string(m_b) +
                       ") on theta_1 in [" + message_number(h) + ", " +
                       message_number((options.scan_points - 1) * h) + "]");
}

XApproximation approximate_x(const Eigen::Matrix2cd& w, int max_reps) {
  if (max_reps < 1) throw InvalidArgument("approximate_x needs max_reps >= 1");
  XApproximation out;
  out.distances.reserve(static_cast<std::size_t>(max_reps));
  const CMatrix x = pauli::x();
  CMatrix power = CMatrix::Identity(2, 2);
  out.best_distance = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= max_reps; ++k) {
    power = w * power;
    const double d = projective_distance(power, x);
    out.distances.push_back(d);
    if (d < out.best_distance) {
      out.best_distance = d;
      out.best_k = k;
    }
  }
  return out;
}

XApproximation approximate_x(double theta_star, int m_a, int m_b, int max_reps) {
  return approximate_x(closed_form_w(m_a, m_b, theta_star), max_reps);
}

}  // namespace zenohol
