// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include "zenohol/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "zenohol/errors.hpp"

namespace zenohol {

namespace {

constexpr double kNormDriftLimit = 1e-8;
constexpr double kInputNormTolerance = 1e-10;

}  // namespace

void Schedule::validate() const {
  if (!(total_time > 0.0) || !std::isfinite(total_time)) {
    throw InvalidArgument("schedule total time must be positive and finite");
  }
  if (path.empty()) throw InvalidArgument("schedule path is empty");
}

std::vector<double> Schedule::durations() const {
  validate();
  const auto& segs = path.segments();
  std::vector<double> out(segs.size(), total_time / static_cast<double>(segs.size()));
  if (allocation == TimeAllocation::equal) return out;
  double arc = 0.0;
  for (const auto& s : segs) arc += parameter_arc(s);
  if (arc == 0.0) return out;
  for (std::size_t i = 0; i < segs.size(); ++i) out[i] = total_time * parameter_arc(segs[i]) / arc;
  return out;
}

EvolutionReport evolve(const ModelConfig& config, const Schedule& schedule, const StateVector& psi0,
                       const EvolveOptions& options) {
  config.validate();
  if (!(options.steps_per_time > 0.0)) throw InvalidArgument("steps_per_time must be positive");
  if (!(options.max_param_step > 0.0)) throw InvalidArgument("max_param_step must be positive");
  if (std::abs(psi0.norm() - 1.0) > kInputNormTolerance) {
    throw InvalidArgument("initial state must be normalized (norm " + message_number(psi0.norm()) + ")");
  }
  const std::vector<double> durations = schedule.durations();
  const DarkSolver solver(config);
  require_same_basis(*solver.basis(), psi0.basis(), "evolve");

  const bool zeno = options.space == EvolutionSpace::zeno;
  const CMatrix& z = solver.zeno().frame.columns();
  const DriveTerms drive(solver.basis());
  const CMatrix hg = build_cavity_coupling(config, solver.basis()).matrix();

  CVector psi = zeno ? CVector(z.adjoint() * psi0.amplitudes()) : psi0.amplitudes();
  if (zeno && std::abs(psi.norm() - 1.0) > 1e-8) {
    throw InvalidArgument("initial state is not inside the Zeno subspace");
  }

  std::int64_t total_steps = 0;
  const auto& segs = schedule.path.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (durations[i] == 0.0) continue;
    const auto steps = static_cast<std::int64_t>(std::ceil(durations[i] * options.steps_per_time));
    const double per_step = parameter_arc(segs[i]) / static_cast<double>(steps);
    if (per_step > options.max_param_step) {
      throw NumericalError("segment " + std::to_string(i) + " is under-resolved: parameter step " +
                               message_number(per_step) + " exceeds " +
                               message_number(options.max_param_step),
                           per_step);
    }
    const double dt = durations[i] / static_cast<double>(steps);
    for (std::int64_t j = 0; j < steps; ++j) {
      const double s = (static_cast<double>(j) + 0.5) / static_cast<double>(steps);
      const ControlParams params = segment_params(segs[i], s, options.omega);
      const CMatrix h = zeno ? solver.projected_drive(params) : CMatrix(hg + drive.at(params));
      psi = expm_hermitian(h, dt) * psi;
    }
    total_steps += steps;
  }

  const double drift = std::abs(psi.norm() - 1.0);
  if (drift > kNormDriftLimit) {
    throw NumericalError("norm drift " + message_number(drift) + " exceeds " +
                             message_number(kNormDriftLimit),
                         drift);
  }
  StateVector final_state(solver.basis(), zeno ? CVector(z * psi) : psi);
  const DickeOverlap overlap = dicke_overlap(final_state);
  return {std::move(final_state), overlap, drift, total_steps};
}

std::vector<SweepRow> fidelity_sweep(const SectorConfig& sector, const std::vector<double>& g_list,
                                     const SweepOptions& options) {
  if (sector.n != 4 || sector.p != 2) {
    throw InvalidArgument("the Dicke sweep is defined for (n, p) = (4, 2)");
  }
  for (double g : g_list) {
    if (!(g > 0.0)) throw InvalidArgument("sweep g values must be positive");
  }
  if (!(options.time_factor > 0.0)) throw InvalidArgument("time factor must be positive");

  const double holonomic =
      prepare_dicke_holonomic(options.m_a, options.m_b, options.theta_1).overlap.fidelity;
  const PathProgram loop_path = w_prime_path(options.m_a, options.m_b, options.theta_1);
  const PathProgram ramp_path = theta_path(0.0, std::numbers::pi / 4);

  std::vector<SweepRow> rows;
  rows.reserve(g_list.size());
  for (double g : g_list) {
    const ModelConfig config{sector, g};
    const auto basis = enumerate_basis(sector);
    const StateVector psi0 = StateVector::basis_state(basis, {2, 0, 0, 0, 0});
    const double t = options.time_factor / g;

    EvolveOptions full = options.evolve;
    full.space = EvolutionSpace::full;
    EvolveOptions restricted = options.evolve;
    restricted.space = EvolutionSpace::zeno;

    SweepRow row;
    row.g = g;
    row.fidelity_holonomic = holonomic;
    row.fidelity_full = evolve(config, {loop_path, t}, psi0, full).overlap.fidelity;
    row.fidelity_zeno = evolve(config, {loop_path, t}, psi0, restricted).overlap.fidelity;
    row.fidelity_no_phi = evolve(config, {ramp_path, t}, psi0, full).overlap.fidelity;
    row.fidelity_full_equal_time =
        evolve(config, {loop_path, t, TimeAllocation::equal}, psi0, full).overlap.fidelity;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace zenohol
