// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "zenohol/holonomy.hpp"

namespace zenohol {

struct EStateSpec {
  ModelConfig model;
  ControlParams params;
};

/// [Omega_a a0^dag - g c a1^dag]^p [Omega_b b0^dag - g c b1^dag]^(n-p) (c^dag)^p
/// applied to the vacuum, unnormalized. Intermediate products are expanded
/// over free occupations and land in the sector at the end.
StateVector build_e_state(const EStateSpec& spec);

/// Zero-photon part of a state (other amplitudes set to zero).
StateVector zero_photon_projection(const StateVector& psi);

struct DickeOverlap {
  double fidelity = 0.0;   ///< |<Phi|psi>|^2
  double amplitude = 0.0;  ///< |<Phi|psi>|
};

/// Overlap with the normalized Dicke state of psi's sector; psi is normalized
/// first. Zero-norm input throws InvalidArgument.
DickeOverlap dicke_overlap(const StateVector& psi);
double dicke_fidelity(const StateVector& psi);

struct DickePreparation {
  HolonomyResult holonomy;
  StateVector final_state;  ///< in sector coordinates
  DickeOverlap overlap;
};

inline constexpr int kDickeMa = -24;
inline constexpr int kDickeMb = 1;
inline constexpr double kDickeTheta1 = 0.669;

/// W'(m_a, m_b; theta_1) applied to the theta = 0 dark state |2000,0>,
/// scored against the Dicke target. (4, 2) only.
DickePreparation prepare_dicke_holonomic(int m_a = kDickeMa, int m_b = kDickeMb,
                                         double theta_1 = kDickeTheta1,
                                         HolonomyMethod method = HolonomyMethod::transport,
                                         const TransportOptions& options = {});

struct DickeCandidate {
  int m_a = 0;
  int m_b = 0;
  double theta_1 = 0.0;
  double fidelity = 0.0;
};

struct DickeSearchGrid {
  int m_a_min = -30;
  int m_a_max = 30;
  int m_b_min = -3;
  int m_b_max = 3;
  std::vector<double> thetas;
};

/// Closed-form W' fidelity over the grid, best first. Ties are broken by
/// (m_a, m_b, theta_1) ascending.
std::vector<DickeCandidate> search_dicke_path(const DickeSearchGrid& grid);

}  // namespace zenohol
