// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include "zenohol/model.hpp"

#include <cmath>

#include "zenohol/errors.hpp"

namespace zenohol {

Complex ControlParams::omega_a() const { return std::polar(omega * std::sin(theta), phi_a); }
Complex ControlParams::omega_b() const { return std::polar(omega * std::cos(theta), phi_b); }

void ModelConfig::validate() const {
  sector.validate();
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw InvalidArgument("model: cavity coupling g must be positive and finite");
  }
}

namespace {

void require_sector(const ModelConfig& config, const SectorBasis& basis) {
  if (!(config.sector == basis.config())) {
    throw InvalidArgument("model: basis was built for a different sector");
  }
}

CMatrix plus_adjoint(const CMatrix& m) { return m + m.adjoint(); }

}  // namespace

OperatorMatrix build_cavity_coupling(const ModelConfig& config, const BasisPtr& basis) {
  config.validate();
  require_sector(config, *basis);
  const CMatrix a = bilinear(basis, {raise(Mode::a2), lower(Mode::a0), lower(Mode::c)}).matrix();
  const CMatrix b = bilinear(basis, {raise(Mode::b2), lower(Mode::b0), lower(Mode::c)}).matrix();
  return OperatorMatrix(basis, config.g * plus_adjoint(a + b));
}

OperatorMatrix build_drive(const ControlParams& params, const BasisPtr& basis) {
  return OperatorMatrix(basis, DriveTerms(basis).at(params));
}

OperatorMatrix build_hamiltonian(const ModelConfig& config, const ControlParams& params,
                                 const BasisPtr& basis) {
  return OperatorMatrix(basis, build_cavity_coupling(config, basis).matrix() +
                                   build_drive(params, basis).matrix());
}

OperatorMatrix build_excitation_number(const BasisPtr& basis) {
  CMatrix m = number_operator(basis, Mode::a1).matrix();
  for (Mode mode : {Mode::a2, Mode::b1, Mode::b2, Mode::c}) {
    m += number_operator(basis, mode).matrix();
  }
  return OperatorMatrix(basis, std::move(m));
}

OperatorMatrix build_excited_count(const BasisPtr& basis) {
  return OperatorMatrix(basis, number_operator(basis, Mode::a2).matrix() +
                                   number_operator(basis, Mode::b2).matrix());
}

OperatorMatrix build_excited_parity(const BasisPtr& basis) {
  const auto d = static_cast<Eigen::Index>(basis->size());
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    m(i, i) = (*basis)[static_cast<std::size_t>(i)].excited_count() % 2 == 0 ? 1.0 : -1.0;
  }
  return OperatorMatrix(basis, std::move(m));
}

DriveTerms::DriveTerms(BasisPtr basis)
    : basis_(std::move(basis)),
      a_raise_(bilinear(basis_, {raise(Mode::a2), lower(Mode::a1)}).matrix()),
      b_raise_(bilinear(basis_, {raise(Mode::b2), lower(Mode::b1)}).matrix()) {}

CMatrix DriveTerms::at(const ControlParams& params) const {
  return plus_adjoint(params.omega_a() * a_raise_ + params.omega_b() * b_raise_);
}

CMatrix DriveTerms::projected(const ControlParams& params, const CMatrix& frame) const {
  return frame.adjoint() * at(params) * frame;
}

}  // namespace zenohol
