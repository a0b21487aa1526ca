// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "zenohol/dynamics.hpp"
#include "zenohol/errors.hpp"

namespace zenohol {
namespace {

constexpr double kPi = std::numbers::pi;

StateVector start_state() {
  return StateVector::basis_state(enumerate_basis({4, 2}), {2, 0, 0, 0, 0});
}

TEST(Schedule, ProportionalDurationsSumToTotal) {
  const Schedule s{w_prime_path(-24, 1, 0.669), 400.0};
  const auto d = s.durations();
  ASSERT_EQ(d.size(), 3u);
  EXPECT_NEAR(d[0] + d[1] + d[2], 400.0, 1e-10);
  // The loop dominates the parameter arc.
  EXPECT_GT(d[1], 100 * d[0]);
  EXPECT_NEAR(d[0] / d[2], 0.669 / (kPi / 4 - 0.669), 1e-12);
}

TEST(Schedule, EqualDurations) {
  const Schedule s{w_prime_path(-24, 1, 0.669), 90.0, TimeAllocation::equal};
  for (double d : s.durations()) EXPECT_DOUBLE_EQ(d, 30.0);
}

TEST(Schedule, Validation) {
  EXPECT_THROW((Schedule{PathProgram{}, 10.0}.durations()), InvalidArgument);
  EXPECT_THROW((Schedule{theta_path(0, 1), 0.0}.durations()), InvalidArgument);
  EXPECT_THROW((Schedule{theta_path(0, 1), -1.0}.durations()), InvalidArgument);
}

TEST(Evolve, StaticEigenvectorOnlyGainsPhase) {
  const ModelConfig cfg{{4, 2}, 5.0};
  const double theta = 0.4;
  const auto basis = enumerate_basis(cfg.sector);
  const CMatrix h = build_hamiltonian(cfg, ControlParams{1.0, theta, 0.0, 0.0}, basis).matrix();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const Eigen::Index k = eig.eigenvalues().size() - 1;
  const StateVector psi0(basis, eig.eigenvectors().col(k));
  const double t = 3.0;
  const auto report = evolve(cfg, {theta_path(theta, theta), t}, psi0, {});
  const Complex overlap = psi0.amplitudes().dot(report.final_state.amplitudes());
  const Complex expected = std::exp(Complex(0.0, -eig.eigenvalues()(k) * t));
  EXPECT_NEAR(std::abs(overlap - expected), 0.0, 1e-10);
}

TEST(Evolve, PreservesNorm) {
  EvolveOptions opt;
  opt.steps_per_time = 100;
  const auto report = evolve({{4, 2}, 10.0}, {w_prime_path(-2, 1, 0.669), 60.0}, start_state(), opt);
  EXPECT_LT(report.norm_drift, 1e-10);
  EXPECT_NEAR(report.final_state.norm(), 1.0, 1e-10);
  EXPECT_GE(report.steps, 6000);
  EXPECT_LE(report.steps, 6003);
}

TEST(Evolve, RejectsUnderResolvedSchedule) {
  EvolveOptions opt;
  opt.steps_per_time = 1.0;
  try {
    evolve({{4, 2}, 20.0}, {w_prime_path(-24, 1, 0.669), 100.0}, start_state(), opt);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("under-resolved"), std::string::npos);
  }
}

TEST(Evolve, RejectsBadInput) {
  const auto basis = enumerate_basis({4, 2});
  const StateVector unnormalized(basis, 2.0 * start_state().amplitudes());
  EXPECT_THROW(evolve({}, {theta_path(0, 1), 10.0}, unnormalized), InvalidArgument);
  EvolveOptions zeno;
  zeno.space = EvolutionSpace::zeno;
  const StateVector photon = StateVector::basis_state(basis, {1, 0, 0, 0, 1});
  EXPECT_THROW(evolve({}, {theta_path(0, 1), 10.0}, photon, zeno), InvalidArgument);
  EXPECT_THROW(evolve({}, {theta_path(0, 1), 10.0}, StateVector::basis_state(enumerate_basis({5, 2}),
                                                                               {2, 0, 0, 0, 0})),
               InvalidArgument);
}

TEST(Evolve, StepRefinementConverges) {
  const Schedule s{w_prime_path(-4, 1, 0.669), 20.0};
  EvolveOptions coarse;
  coarse.steps_per_time = 500;
  EvolveOptions fine = coarse;
  fine.steps_per_time = 1000;
  const ModelConfig cfg{{4, 2}, 10.0};
  const double a = evolve(cfg, s, start_state(), coarse).overlap.fidelity;
  const double b = evolve(cfg, s, start_state(), fine).overlap.fidelity;
  EXPECT_LE(std::abs(a - b), 1e-4);
}

TEST(Evolve, ZenoRampBecomesAdiabatic) {
  // Closed-form fidelity of the theta ramp 0 -> pi/4 alone.
  constexpr double kRampFidelity = 0.9866060555964672;
  EvolveOptions zeno;
  zeno.space = EvolutionSpace::zeno;
  zeno.steps_per_time = 50;
  double previous_gap = 1.0;
  for (double t : {10.0, 40.0, 160.0}) {
    const double f = evolve({}, {theta_path(0, kPi / 4), t}, start_state(), zeno).overlap.fidelity;
    const double gap = std::abs(f - kRampFidelity);
    EXPECT_LT(gap, previous_gap) << "T=" << t;
    previous_gap = gap;
  }
  EXPECT_LT(previous_gap, 1e-3);
}

TEST(Evolve, StrongCouplingTracksZenoRun) {
  const Schedule s{theta_path(0, kPi / 4), 40.0};
  EvolveOptions zeno;
  zeno.space = EvolutionSpace::zeno;
  EvolveOptions full;
  full.steps_per_time = 2000;
  const double fz = evolve({}, s, start_state(), zeno).overlap.fidelity;
  const double weak = evolve({{4, 2}, 5.0}, s, start_state(), full).overlap.fidelity;
  const double strong = evolve({{4, 2}, 40.0}, s, start_state(), full).overlap.fidelity;
  EXPECT_LT(std::abs(strong - fz), std::abs(weak - fz));
}

TEST(Sweep, RejectsOtherSectorsAndBadOptions) {
  EXPECT_THROW(fidelity_sweep({5, 2}, {10.0}), InvalidArgument);
  EXPECT_THROW(fidelity_sweep({4, 2}, {0.0}), InvalidArgument);
  SweepOptions bad;
  bad.time_factor = 0.0;
  EXPECT_THROW(fidelity_sweep({4, 2}, {10.0}, bad), InvalidArgument);
}

TEST(Sweep, SmallRunHasAllColumns) {
  SweepOptions opt;
  opt.m_a = -2;
  opt.time_factor = 400.0;
  opt.evolve.steps_per_time = 100;
  const auto rows = fidelity_sweep({4, 2}, {20.0}, opt);
  ASSERT_EQ(rows.size(), 1u);
  const SweepRow& r = rows[0];
  EXPECT_EQ(r.g, 20.0);
  for (double f : {r.fidelity_full, r.fidelity_zeno, r.fidelity_holonomic, r.fidelity_no_phi,
                   r.fidelity_full_equal_time}) {
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0 + 1e-12);
  }
  EXPECT_NEAR(r.fidelity_holonomic,
              prepare_dicke_holonomic(-2, 1, 0.669, HolonomyMethod::closed_form).overlap.fidelity, 1e-7);
}

}  // namespace
}  // namespace zenohol
