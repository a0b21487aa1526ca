// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include <numbers>

#include <gtest/gtest.h>

#include "zenohol/errors.hpp"
#include "zenohol/path.hpp"

namespace zenohol {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(ParsePath, ThetaRampWithPiLiterals) {
  const auto p = parse_path("theta:pi/4->pi/3");
  ASSERT_EQ(p.size(), 1u);
  const auto& r = std::get<ThetaRamp>(p.segments()[0]);
  EXPECT_DOUBLE_EQ(r.from, kPi / 4);
  EXPECT_DOUBLE_EQ(r.to, kPi / 3);
}

TEST(ParsePath, AngleForms) {
  EXPECT_DOUBLE_EQ(*parse_path("theta:0.25->0").start_theta(), 0.25);
  EXPECT_DOUBLE_EQ(*parse_path("theta:pi/2->0").start_theta(), kPi / 2);
  EXPECT_DOUBLE_EQ(*parse_path("theta:1e-1->0").start_theta(), 0.1);
}

TEST(ParsePath, MultiSegmentWithWhitespace) {
  const auto p = parse_path("  theta: 0 -> 0.669 ;phi: ma=-24, mb=1 @ theta=0.669;  theta:0.669->pi/4 ");
  ASSERT_EQ(p.size(), 3u);
  const auto& loop = std::get<PhiLoop>(p.segments()[1]);
  EXPECT_EQ(loop.m_a, -24);
  EXPECT_EQ(loop.m_b, 1);
  EXPECT_DOUBLE_EQ(loop.theta, 0.669);
  EXPECT_DOUBLE_EQ(*p.start_theta(), 0.0);
  EXPECT_DOUBLE_EQ(*p.end_theta(), kPi / 4);
}

TEST(ParsePath, CoefficientTimesPi) {
  EXPECT_DOUBLE_EQ(*parse_path("theta:0.5*pi/2->0").start_theta(), kPi / 4);
  EXPECT_DOUBLE_EQ(*parse_path("theta:0.25pi->0").start_theta(), kPi / 4);
}

TEST(ParsePath, EmptyTextIsEmptyProgram) {
  EXPECT_TRUE(parse_path("").empty());
  EXPECT_TRUE(parse_path("   ").empty());
  EXPECT_FALSE(parse_path("").start_theta().has_value());
}

TEST(ParsePath, SyntaxErrorsCarryPosition) {
  try {
    parse_path("theta:0.1=>0.2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 9u);
    EXPECT_EQ(e.segment(), -1);
  }
  EXPECT_THROW(parse_path("phi:ma=1.5,mb=0@theta=0.3"), ParseError);
  EXPECT_THROW(parse_path("theta:0.1->0.2;"), ParseError);
  EXPECT_THROW(parse_path("omega:1"), ParseError);
  EXPECT_THROW(parse_path("theta:pi/0->0"), ParseError);
}

TEST(ParsePath, DiscontinuityNamesSegment) {
  try {
    parse_path("theta:0->0.5; phi:ma=1,mb=0@theta=0.6");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.segment(), 1);
    EXPECT_EQ(e.position(), 14u);
  }
}

TEST(ParsePath, RangeChecked) {
  EXPECT_THROW(parse_path("theta:0->2"), ParseError);
  EXPECT_THROW(parse_path("phi:ma=1,mb=0@theta=-0.1"), ParseError);
  EXPECT_NO_THROW(parse_path("theta:0->pi/2"));
}

TEST(FormatPath, RoundTripsExactly) {
  const auto p = w_prime_path(-24, 1, 0.669);
  const auto q = parse_path(format_path(p));
  ASSERT_EQ(q.size(), p.size());
  EXPECT_EQ(format_path(q), format_path(p));
  EXPECT_DOUBLE_EQ(*q.end_theta(), kPi / 4);
}

TEST(PathProgram, ReversedTraversesBackwards) {
  const auto p = w_path(3, -2, 0.5);
  const auto r = p.reversed();
  ASSERT_EQ(r.size(), 3u);
  const auto& loop = std::get<PhiLoop>(r.segments()[1]);
  EXPECT_EQ(loop.m_a, -3);
  EXPECT_EQ(loop.m_b, 2);
  EXPECT_DOUBLE_EQ(*r.start_theta(), *p.end_theta());
}

TEST(PathProgram, ThenChecksContinuity) {
  EXPECT_NO_THROW(theta_path(0, 0.3).then(phi_path(1, 0, 0.3)));
  EXPECT_THROW(theta_path(0, 0.3).then(phi_path(1, 0, 0.4)), ParseError);
}

TEST(Segment, ParamsAndArc) {
  const PathSegment loop = PhiLoop{2, -1, 0.7};
  const auto mid = segment_params(loop, 0.25, 2.0);
  EXPECT_DOUBLE_EQ(mid.theta, 0.7);
  EXPECT_DOUBLE_EQ(mid.phi_a, kPi);
  EXPECT_DOUBLE_EQ(mid.phi_b, -kPi / 2);
  EXPECT_DOUBLE_EQ(mid.omega, 2.0);
  EXPECT_DOUBLE_EQ(parameter_arc(loop), 6 * kPi);
  const PathSegment ramp = ThetaRamp{0.2, 0.6};
  EXPECT_DOUBLE_EQ(segment_params(ramp, 0.5).theta, 0.4);
  EXPECT_DOUBLE_EQ(parameter_arc(ramp), 0.4);
}

}  // namespace
}  // namespace zenohol
