// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "zenohol/errors.hpp"
#include "zenohol/linalg.hpp"

namespace zenohol {
namespace {

CMatrix random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> d;
  CMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

CMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index n) {
  const CMatrix a = random_matrix(rng, n, n);
  return a + a.adjoint();
}

TEST(NullSpace, RankDeficientProduct) {
  std::mt19937_64 rng(1);
  const CMatrix m = random_matrix(rng, 6, 3) * random_matrix(rng, 3, 8);
  const CMatrix n = null_space(m);
  EXPECT_EQ(n.cols(), 5);
  EXPECT_LT((m * n).norm(), 1e-10);
  EXPECT_LT(orthonormality_defect(n), 1e-12);
}

TEST(NullSpace, ZeroMatrixGivesWholeSpace) {
  EXPECT_EQ(null_space(CMatrix::Zero(4, 4)).cols(), 4);
  EXPECT_EQ(hermitian_null_space(CMatrix::Zero(3, 3)).cols(), 3);
}

TEST(NullSpace, HermitianReportsSpectrum) {
  CMatrix h = CMatrix::Zero(3, 3);
  h(0, 0) = 2.0;
  h(1, 1) = -1.0;
  Eigen::VectorXd spectrum;
  const CMatrix n = hermitian_null_space(h, kNullTolerance, &spectrum);
  ASSERT_EQ(n.cols(), 1);
  EXPECT_NEAR(std::abs(n(2, 0)), 1.0, 1e-14);
  EXPECT_EQ(spectrum.size(), 3);
}

TEST(Expm, MatchesTaylorOracle) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix h = random_hermitian(rng, 7);
    const double t = 0.3 * (trial + 1);
    const CMatrix ours = expm_hermitian(h, t);
    const CMatrix ref = oracle::expm(-kI * t * h);
    EXPECT_LT((ours - ref).norm(), 1e-10) << "trial " << trial;
    EXPECT_LT(orthonormality_defect(ours), 1e-12);
  }
}

TEST(PolarFactor, IsClosestUnitary) {
  std::mt19937_64 rng(3);
  const CMatrix m = random_matrix(rng, 4, 4);
  const CMatrix u = unitary_polar_factor(m);
  EXPECT_LT(orthonormality_defect(u), 1e-12);
  // M = U P with P Hermitian positive semidefinite.
  const CMatrix p = u.adjoint() * m;
  EXPECT_LT((p - p.adjoint()).norm(), 1e-12);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(p);
  EXPECT_GT(eig.eigenvalues().minCoeff(), -1e-12);
}

TEST(ProjectiveDistance, MetricOnPhaseQuotient) {
  std::mt19937_64 rng(4);
  const CMatrix u = unitary_polar_factor(random_matrix(rng, 3, 3));
  const CMatrix v = unitary_polar_factor(random_matrix(rng, 3, 3));
  const CMatrix w = unitary_polar_factor(random_matrix(rng, 3, 3));
  EXPECT_LT(projective_distance(u, std::polar(1.0, 0.77) * u), 1e-14);
  EXPECT_GT(projective_distance(u, v), 1e-3);
  EXPECT_NEAR(projective_distance(u, v), projective_distance(v, u), 1e-14);
  EXPECT_LE(projective_distance(u, w), projective_distance(u, v) + projective_distance(v, w) + 1e-14);
  EXPECT_NEAR(projective_distance(u, v), oracle::phase_distance(u, v), 1e-9);
  EXPECT_LE(projective_distance(u, v), std::sqrt(6.0) + 1e-14);
}

TEST(ProjectiveDistance, ResolvesTinyDifferences) {
  CMatrix u = CMatrix::Identity(2, 2);
  CMatrix v = u;
  v(0, 0) = std::polar(1.0, 1e-11);
  EXPECT_GT(projective_distance(u, v), 1e-12);
  EXPECT_LT(projective_distance(u, v), 1e-10);
}

TEST(ProjectiveDistance, RejectsShapeMismatch) {
  EXPECT_THROW(projective_distance(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)), InvalidArgument);
}

TEST(CanonicalFrame, GaugeInvariant) {
  std::mt19937_64 rng(5);
  const CMatrix f = unitary_polar_factor(random_matrix(rng, 6, 2));
  const CMatrix g = unitary_polar_factor(random_matrix(rng, 2, 2));
  const CMatrix a = canonical_frame(f);
  const CMatrix b = canonical_frame(f * g);
  EXPECT_LT((a - b).norm(), 1e-10);
  EXPECT_LT((a * a.adjoint() - f * f.adjoint()).norm(), 1e-12);
  EXPECT_LT(orthonormality_defect(a), 1e-12);
}

}  // namespace
}  // namespace zenohol
