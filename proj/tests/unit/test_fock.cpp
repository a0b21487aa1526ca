// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "zenohol/errors.hpp"
#include "zenohol/fock.hpp"

namespace zenohol {
namespace {

std::vector<std::pair<int, int>> to_oracle(std::initializer_list<LadderOp> ops) {
  std::vector<std::pair<int, int>> out;
  for (const auto& op : ops) out.emplace_back(static_cast<int>(op.mode), op.kind == LadderKind::raise ? 1 : -1);
  return out;
}

TEST(SectorBasis, FourTwoHasFifteenStates) {
  EXPECT_EQ(enumerate_basis({4, 2})->size(), 15u);
}

TEST(SectorBasis, MatchesBruteForceEnumeration) {
  for (int n = 2; n <= 7; ++n) {
    for (int p = 1; p <= n; ++p) {
      const auto basis = enumerate_basis({n, p});
      const auto ref = oracle::sector_states(n, p);
      ASSERT_EQ(basis->size(), ref.size()) << n << "," << p;
      EXPECT_EQ(static_cast<long>(basis->size()), oracle::sector_dimension(n, p));
      for (std::size_t i = 0; i < ref.size(); ++i) {
        const auto& s = (*basis)[i];
        EXPECT_EQ(s.a1, ref[i].a1);
        EXPECT_EQ(s.a2, ref[i].a2);
        EXPECT_EQ(s.b1, ref[i].b1);
        EXPECT_EQ(s.b2, ref[i].b2);
        EXPECT_EQ(s.c, ref[i].c);
      }
    }
  }
}

TEST(SectorBasis, StatesRespectConstraints) {
  const SectorConfig cfg{5, 3};
  const auto basis = enumerate_basis(cfg);
  for (const auto& s : basis->states()) {
    EXPECT_TRUE(s.belongs_to(cfg));
    EXPECT_EQ(s.excitations(), cfg.p);
    EXPECT_GE(s.a0(cfg), 0);
    EXPECT_GE(s.b0(cfg), 0);
    EXPECT_EQ(basis->index_of(s), *basis->find(s));
  }
}

TEST(SectorBasis, RejectsInvalidSectors) {
  EXPECT_THROW(enumerate_basis({1, 1}), InvalidArgument);
  EXPECT_THROW(enumerate_basis({4, 0}), InvalidArgument);
  EXPECT_THROW(enumerate_basis({4, 5}), InvalidArgument);
  EXPECT_THROW(enumerate_basis({4, 2})->index_of({3, 0, 0, 0, 0}), InvalidArgument);
}

TEST(BasisState, LabelText) {
  EXPECT_EQ(to_string(BasisState{2, 0, 0, 0, 0}), "|2000,0>");
  EXPECT_EQ(to_string(BasisState{0, 1, 1, 0, 0}), "|0110,0>");
}

TEST(Ladder, CommutatorIsIdentityAwayFromEdges) {
  Occupations o;
  o[Mode::c] = 3;
  const auto down = apply_ladder(lower(Mode::c), o);
  ASSERT_TRUE(down.has_value());
  EXPECT_DOUBLE_EQ(down->amplitude, std::sqrt(3.0));
  const auto up = apply_ladder(raise(Mode::c), o);
  ASSERT_TRUE(up.has_value());
  EXPECT_DOUBLE_EQ(up->amplitude, 2.0);
  // c c^dag - c^dag c = 1 on |3>
  const double cc_dag = up->amplitude * up->amplitude;
  const double c_dag_c = down->amplitude * down->amplitude;
  EXPECT_DOUBLE_EQ(cc_dag - c_dag_c, 1.0);
  Occupations empty;
  EXPECT_FALSE(apply_ladder(lower(Mode::a1), empty).has_value());
}

TEST(Bilinear, MatchesOracleOnSeveralSectors) {
  const std::vector<std::initializer_list<LadderOp>> products = {
      {raise(Mode::a2), lower(Mode::a1)},
      {raise(Mode::b2), lower(Mode::b1)},
      {raise(Mode::a2), lower(Mode::a0), lower(Mode::c)},
      {raise(Mode::b2), lower(Mode::b0), lower(Mode::c)},
      {raise(Mode::a1), lower(Mode::a1)},
  };
  for (const SectorConfig cfg : {SectorConfig{4, 2}, SectorConfig{5, 2}, SectorConfig{5, 3}}) {
    const auto basis = enumerate_basis(cfg);
    for (const auto& ops : products) {
      const CMatrix ours = bilinear(basis, ops).matrix();
      const CMatrix ref = oracle::operator_matrix(cfg.n, cfg.p, to_oracle(ops));
      EXPECT_LT((ours - ref).norm(), 1e-14);
    }
  }
}

TEST(Bilinear, RejectsNonConservingProducts) {
  const auto basis = enumerate_basis({4, 2});
  EXPECT_THROW(bilinear(basis, {raise(Mode::a2), lower(Mode::b1)}), InvalidArgument);
  EXPECT_THROW(bilinear(basis, {raise(Mode::c)}), InvalidArgument);
  EXPECT_THROW(bilinear(basis, {raise(Mode::a1), lower(Mode::a0)}), InvalidArgument);
}

TEST(NumberOperator, DiagonalCounts) {
  const auto basis = enumerate_basis({4, 2});
  const auto nc = number_operator(basis, Mode::c);
  for (std::size_t i = 0; i < basis->size(); ++i) {
    EXPECT_DOUBLE_EQ(nc(i, i).real(), (*basis)[i].c);
  }
}

TEST(NumberOperator, AgreesWithLadderProduct) {
  const auto basis = enumerate_basis({6, 3});
  for (int m = 0; m < kModeCount; ++m) {
    const auto mode = static_cast<Mode>(m);
    const CMatrix ladder = bilinear(basis, {raise(mode), lower(mode)}).matrix();
    EXPECT_LT((number_operator(basis, mode).matrix() - ladder).norm(), 1e-13) << to_string(mode);
  }
}

TEST(StateVector, ChecksDimensionsAndNormalizes) {
  const auto basis = enumerate_basis({4, 2});
  EXPECT_THROW(StateVector(basis, CVector::Zero(3)), InvalidArgument);
  EXPECT_THROW(StateVector(basis, CVector::Zero(15)).normalized(), InvalidArgument);
  const auto s = StateVector::basis_state(basis, {2, 0, 0, 0, 0});
  EXPECT_DOUBLE_EQ(s.norm(), 1.0);
  EXPECT_EQ(s.amplitude({2, 0, 0, 0, 0}), Complex(1.0));
  EXPECT_EQ(s.amplitude({0, 0, 2, 0, 0}), Complex(0.0));
}

TEST(DickeVector, OneTwoOneForFourTwo) {
  const auto basis = enumerate_basis({4, 2});
  const auto d = dicke_vector(basis);
  EXPECT_NEAR(d.norm(), 1.0, 1e-15);
  const double s6 = std::sqrt(6.0);
  EXPECT_NEAR(d.amplitude({0, 0, 2, 0, 0}).real(), 1.0 / s6, 1e-15);
  EXPECT_NEAR(d.amplitude({1, 0, 1, 0, 0}).real(), 2.0 / s6, 1e-15);
  EXPECT_NEAR(d.amplitude({2, 0, 0, 0, 0}).real(), 1.0 / s6, 1e-15);
}

}  // namespace
}  // namespace zenohol
