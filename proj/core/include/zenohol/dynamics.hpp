// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "zenohol/application.hpp"
#include "zenohol/path.hpp"

namespace zenohol {

enum class TimeAllocation {
  proportional,  ///< segment time proportional to parameter_arc()
  equal,         ///< every segment gets T / segments
};

struct Schedule {
  PathProgram path;
  double total_time = 400.0;
  TimeAllocation allocation = TimeAllocation::proportional;

  void validate() const;
  /// Per-segment durations, summing to total_time.
  std::vector<double> durations() const;
};

enum class EvolutionSpace {
  full,  ///< whole symmetric sector with H_g + H_Omega
  zeno,  ///< Zeno frame with the projected drive only
};

struct EvolveOptions {
  EvolutionSpace space = EvolutionSpace::full;
  /// Time steps per unit time (1/Omega). 500 gives 2e5 steps at T = 400.
  double steps_per_time = 500.0;
  double omega = 1.0;
  /// Largest theta or phi change allowed in one step before the run is
  /// rejected as under-resolved.
  double max_param_step = 0.05;
};

struct EvolutionReport {
  StateVector final_state;
  DickeOverlap overlap;
  double norm_drift = 0.0;
  std::int64_t steps = 0;
};

/// i d psi/dt = H(t) psi with a linear ramp of each segment's parameter over
/// its allotted time. Each step applies exp(-i H(t_mid) dt).
/// Throws NumericalError for an under-resolved step size or norm drift above
/// 1e-8.
EvolutionReport evolve(const ModelConfig& config, const Schedule& schedule,
                       const StateVector& psi0, const EvolveOptions& options = {});

/// T = factor / g
inline constexpr double kDefaultTimeFactor = 8000.0;

struct SweepRow {
  double g = 0.0;
  double fidelity_full = 0.0;
  double fidelity_zeno = 0.0;
  double fidelity_holonomic = 0.0;
  double fidelity_no_phi = 0.0;
  double fidelity_full_equal_time = 0.0;
};

struct SweepOptions {
  int m_a = kDickeMa;
  int m_b = kDickeMb;
  double theta_1 = kDickeTheta1;
  double time_factor = kDefaultTimeFactor;
  EvolveOptions evolve;
};

/// One row per g: full-sector, Zeno-restricted and holonomic fidelities of the
/// W' Dicke path, the theta-ramp-only baseline 0 -> pi/4, and the full-sector
/// run with equal segment times.
std::vector<SweepRow> fidelity_sweep(const SectorConfig& sector, const std::vector<double>& g_list,
                                     const SweepOptions& options = {});

}  // namespace zenohol
