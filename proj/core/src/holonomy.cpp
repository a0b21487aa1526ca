// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include "zenohol/holonomy.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "zenohol/errors.hpp"

namespace zenohol {

namespace {

// Offset used to take the limit of the dark frame at a degenerate endpoint.
constexpr double kLimitOffset = 1e-7;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

CMatrix align(const CMatrix& null_basis, const CMatrix& psi) {
  return null_basis * unitary_polar_factor(null_basis.adjoint() * psi);
}

// Eigenvectors of the projected drive with vanishing eigenvalue, ordered by
// |eigenvalue|. Endpoints may carry extra zero modes; interior points may not.
CMatrix near_null(const DarkSolver& solver, const ControlParams& params, Eigen::Index expected,
                  bool endpoint, std::size_t segment, long step) {
  const CMatrix h = solver.projected_drive(params);
  if (h.rows() == 0) return CMatrix(0, 0);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const Eigen::VectorXd mag = eig.eigenvalues().cwiseAbs();
  const double scale = mag.maxCoeff();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(mag.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return mag(a) < mag(b); });
  Eigen::Index count = 0;
  for (auto i : order) {
    if (scale == 0.0 || mag(i) <= kNullTolerance * scale) ++count;
  }
  if (expected >= 0 && (count < expected || (!endpoint && count != expected))) {
    throw NumericalError("dark dimension changes from " + std::to_string(expected) + " to " +
                             std::to_string(count) + " in segment " + std::to_string(segment) +
                             " at step " + std::to_string(step),
                         0.0);
  }
  CMatrix out(h.rows(), count);
  for (Eigen::Index c = 0; c < count; ++c) out.col(c) = eig.eigenvectors().col(order[static_cast<std::size_t>(c)]);
  return out;
}

class Transporter {
 public:
  Transporter(const PathProgram& path, const DarkSolver& solver, const TransportOptions& opts)
      : path_(path), solver_(solver), opts_(opts) {
    dim_ = -1;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const auto mid = segment_params(path.segments()[i], 0.5, opts.omega);
      const Eigen::Index k = near_null(solver, mid, -1, true, i, 0).cols();
      if (dim_ >= 0 && k != dim_) {
        throw NumericalError("dark dimension changes from " + std::to_string(dim_) + " to " +
                                 std::to_string(k) + " in segment " + std::to_string(i),
                             0.0);
      }
      dim_ = k;
    }
    const auto& segs = path.segments();
    g_in_ = gauge_at(segs.front(), 0.0, kLimitOffset, 0);
    g_out_ = gauge_at(segs.back(), 1.0, 1.0 - kLimitOffset, segs.size() - 1);
  }

  Eigen::Index dim() const { return dim_; }
  const CMatrix& gauge_in() const { return g_in_; }
  const CMatrix& gauge_out() const { return g_out_; }

  CMatrix run(long steps) const {
    CMatrix psi = g_in_;
    const auto& segs = path_.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
      for (long j = 1; j <= steps; ++j) {
        const double s = static_cast<double>(j) / static_cast<double>(steps);
        const auto params = segment_params(segs[i], s, opts_.omega);
        psi = align(near_null(solver_, params, dim_, j == steps, i, j), psi);
      }
    }
    return g_out_.adjoint() * psi;
  }

 private:
  CMatrix gauge_at(const PathSegment& seg, double s, double s_near, std::size_t index) const {
    const auto params = segment_params(seg, s, opts_.omega);
    CMatrix g = solver_.gauge_coords(params);
    if (g.cols() == dim_) return g;
    const CMatrix nul = near_null(solver_, params, dim_, true, index, 0);
    const CMatrix near = near_null(solver_, segment_params(seg, s_near, opts_.omega), dim_, false, index, 0);
    const CMatrix limit = align(nul, near);
    return solver_.zeno().frame.columns().adjoint() * canonical_frame(solver_.embed(limit));
  }

  const PathProgram& path_;
  const DarkSolver& solver_;
  TransportOptions opts_;
  Eigen::Index dim_ = 0;
  CMatrix g_in_;
  CMatrix g_out_;
};

// exp(i (ax X + ay Y + az Z))
Eigen::Matrix2cd su2_exp(double ax, double ay, double az) {
  const double r = std::sqrt(ax * ax + ay * ay + az * az);
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity() * std::cos(r);
  if (r > 0.0) {
    const double s = std::sin(r) / r;
    u(0, 0) += kI * s * az;
    u(1, 1) -= kI * s * az;
    u(0, 1) += kI * s * Complex(ax, -ay);
    u(1, 0) += kI * s * Complex(ax, ay);
  }
  return u;
}

void require_four_two(const SectorConfig& s) {
  if (s.n != 4 || s.p != 2) {
    throw InvalidArgument("closed-form holonomies exist for (n, p) = (4, 2) only; got (" +
                          std::to_string(s.n) + ", " + std::to_string(s.p) + ")");
  }
}

// Empty paths act as the identity on the dark frame at theta = pi/4.
HolonomyResult identity_result(const DarkSolver& solver) {
  const ControlParams params{1.0, std::numbers::pi / 4, 0.0, 0.0};
  const Frame frame(solver.basis(), solver.embed(solver.gauge_coords(params)));
  const Eigen::Index k = frame.dim();
  return HolonomyResult{CMatrix::Identity(k, k), frame, frame, 0, 0.0};
}

}  // namespace

HolonomyResult transport(const PathProgram& path, const ModelConfig& config,
                         const TransportOptions& options) {
  const DarkSolver solver(config);
  return transport(path, solver, options);
}

HolonomyResult transport(const PathProgram& path, const DarkSolver& solver,
                         const TransportOptions& options) {
  if (options.initial_steps < 1 || options.max_steps < 2 * options.initial_steps) {
    throw InvalidArgument("transport needs 1 <= initial_steps and 2 * initial_steps <= max_steps");
  }
  if (!(options.tolerance > 0.0)) throw InvalidArgument("transport tolerance must be positive");

  if (path.empty()) return identity_result(solver);
  const Transporter tr(path, solver, options);
  const auto& basis = solver.basis();
  auto result = [&](CMatrix u, long steps, double err) {
    return HolonomyResult{std::move(u), Frame(basis, solver.embed(tr.gauge_in())),
                          Frame(basis, solver.embed(tr.gauge_out())),
                          static_cast<std::int64_t>(steps) * static_cast<std::int64_t>(path.size()), err};
  };
  if (tr.dim() == 0) return result(CMatrix(0, 0), 0, 0.0);

  auto extrapolate = [](const CMatrix& coarse, const CMatrix& fine) {
    return CMatrix(unitary_polar_factor((4.0 * fine - coarse) / 3.0));
  };

  long n = options.initial_steps;
  CMatrix coarse = tr.run(n);
  CMatrix fine = tr.run(2 * n);
  CMatrix previous = extrapolate(coarse, fine);
  double err = std::numeric_limits<double>::infinity();
  while (4 * n <= options.max_steps) {
    n *= 2;
    coarse = std::move(fine);
    fine = tr.run(2 * n);
    const CMatrix current = extrapolate(coarse, fine);
    err = projective_distance(current, previous);
    if (err <= options.tolerance) return result(current, 2 * n, err);
    previous = current;
  }
  throw NumericalError("transport did not reach tolerance " + message_number(options.tolerance) +
                           " within " + std::to_string(options.max_steps) +
                           " steps per segment (last change " + message_number(err) + ")",
                       err);
}

double theta_coefficient(double theta) {
  return -std::atan(std::sqrt((19.0 - 5.0 * std::cos(4.0 * theta)) / 6.0));
}

ClosedFormCoeffs phi_loop_coefficients(int m_a, int m_b, double theta) {
  constexpr double pi = std::numbers::pi;
  const double c4 = std::cos(4.0 * theta);
  const double sum = m_a + m_b;
  const double diff = m_a - m_b;
  ClosedFormCoeffs c;
  c.c_x = 2.0 * std::sqrt(6.0) * diff * pi * std::sin(2.0 * theta) * std::sin(4.0 * theta) /
          ((5.0 - c4) * std::sqrt(19.0 - 5.0 * c4));
  const double den = (5.0 - c4) * (5.0 * c4 - 19.0);
  c.c_z = sum * pi * (std::cos(8.0 * theta) - 20.0 * c4 + 51.0) / den -
          diff * pi * (16.0 * std::cos(6.0 * theta) - 96.0 * std::cos(2.0 * theta)) / den;
  return c;
}

// In the (D1, D2) ordering the Pauli content of the printed formulas appears
// conjugated by X: sigma_y flips sign and sigma_z flips sign.
Eigen::Matrix2cd closed_form_theta(double theta_to, double theta_from) {
  return su2_exp(0.0, theta_coefficient(theta_to) - theta_coefficient(theta_from), 0.0);
}

Eigen::Matrix2cd closed_form_phi(int m_a, int m_b, double theta) {
  const auto c = phi_loop_coefficients(m_a, m_b, theta);
  return su2_exp(c.c_x, 0.0, -c.c_z);
}

HolonomyResult closed_form(const PathProgram& path, const ModelConfig& config) {
  require_four_two(config.sector);
  if (path.empty()) return identity_result(DarkSolver(config));
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  for (const auto& seg : path.segments()) {
    const Eigen::Matrix2cd step = std::visit(
        overloaded{[](const ThetaRamp& r) { return closed_form_theta(r.to, r.from); },
                   [](const PhiLoop& l) { return closed_form_phi(l.m_a, l.m_b, l.theta); }},
        seg);
    u = step * u;
  }
  const DarkFrame in = dark_frame(config, segment_params(path.segments().front(), 0.0));
  const DarkFrame out = dark_frame(config, segment_params(path.segments().back(), 1.0));
  return HolonomyResult{CMatrix(u), in.frame, out.frame, 0, 0.0};
}

HolonomyResult compose_w(int m_a, int m_b, double theta_1, HolonomyMethod method,
                         const ModelConfig& config) {
  const auto path = w_path(m_a, m_b, theta_1);
  return method == HolonomyMethod::closed_form ? closed_form(path, config) : transport(path, config);
}

HolonomyResult compose_w_prime(int m_a, int m_b, double theta_1, HolonomyMethod method,
                               const ModelConfig& config) {
  const auto path = w_prime_path(m_a, m_b, theta_1);
  return method == HolonomyMethod::closed_form ? closed_form(path, config) : transport(path, config);
}

Eigen::Matrix2cd closed_form_w(int m_a, int m_b, double theta_1) {
  constexpr double q = std::numbers::pi / 4;
  return closed_form_theta(q, theta_1) * closed_form_phi(m_a, m_b, theta_1) *
         closed_form_theta(theta_1, q);
}

Eigen::Matrix2cd closed_form_w_prime(int m_a, int m_b, double theta_1) {
  constexpr double q = std::numbers::pi / 4;
  return closed_form_theta(q, theta_1) * closed_form_phi(m_a, m_b, theta_1) *
         closed_form_theta(theta_1, 0.0);
}

}  // namespace zenohol
