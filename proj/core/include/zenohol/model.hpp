// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "zenohol/fock.hpp"

namespace zenohol {

/// Drive settings. Energies are in units of `omega` (1 by default), so the
/// cavity coupling g is effectively the ratio g / Omega.
struct ControlParams {
  double omega = 1.0;
  double theta = 0.0;
  double phi_a = 0.0;
  double phi_b = 0.0;

  /// Omega sin(theta) e^{i phi_a}
  Complex omega_a() const;
  /// Omega cos(theta) e^{i phi_b}
  Complex omega_b() const;
};

struct ModelConfig {
  SectorConfig sector;
  double g = 20.0;

  void validate() const;
};

/// g (a2^dag a0 + b2^dag b0) c + h.c.
OperatorMatrix build_cavity_coupling(const ModelConfig& config, const BasisPtr& basis);

/// Omega_a a2^dag a1 + Omega_b b2^dag b1 + h.c.
OperatorMatrix build_drive(const ControlParams& params, const BasisPtr& basis);

/// Cavity coupling plus drive.
OperatorMatrix build_hamiltonian(const ModelConfig& config, const ControlParams& params,
                                 const BasisPtr& basis);

/// Total excitation number N (diagonal, equal to p on the whole sector).
OperatorMatrix build_excitation_number(const BasisPtr& basis);
/// N2 = n_a2 + n_b2
OperatorMatrix build_excited_count(const BasisPtr& basis);
/// Pi2 = exp(i pi N2)
OperatorMatrix build_excited_parity(const BasisPtr& basis);

/// Caches the two raising bilinears so the drive can be re-evaluated cheaply
/// along a path.
class DriveTerms {
 public:
  explicit DriveTerms(BasisPtr basis);

  /// Same matrix as build_drive(params, basis).
  CMatrix at(const ControlParams& params) const;
  /// Drive conjugated into a frame: F^dag H_Omega F.
  CMatrix projected(const ControlParams& params, const CMatrix& frame) const;

  const BasisPtr& basis() const { return basis_; }

 private:
  BasisPtr basis_;
  CMatrix a_raise_;  // a2^dag a1
  CMatrix b_raise_;  // b2^dag b1
};

}  // namespace zenohol
