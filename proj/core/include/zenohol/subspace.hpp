// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file subspace.hpp
 * @brief Zeno subspace, effective drive block and dark subspace.
 *
 * The Zeno subspace is the null space of the cavity coupling, minus any
 * direction on which the projected drive vanishes identically. Inside it the
 * drive anticommutes with the excited-level parity, so in a parity-ordered
 * frame it reads [[0, D^dag], [D, 0]] with D mapping even to odd parity. The
 * dark subspace is the null space of the projected drive.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "zenohol/fock.hpp"
#include "zenohol/model.hpp"

namespace zenohol {

/// Ordered orthonormal columns spanning a subspace, expressed in sector
/// coordinates.
class Frame {
 public:
  Frame(BasisPtr basis, CMatrix columns);

  const SectorBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const CMatrix& columns() const { return columns_; }
  Eigen::Index dim() const { return columns_.cols(); }
  Eigen::Index ambient_dim() const { return columns_.rows(); }

  CMatrix projector() const { return columns_ * columns_.adjoint(); }
  /// |P_this - P_other|_F
  double projector_distance(const Frame& other) const;

 private:
  BasisPtr basis_;
  CMatrix columns_;
};

/// Frame spanning the numerical null space of `op` (see zenohol::null_space).
Frame null_space(const OperatorMatrix& op, double rel_tol = kNullTolerance);

struct DecoupledSplit {
  Frame kept;
  Frame removed;
};

/// Separates the directions of `frame` on which the projected drive has a
/// vanishing row and column for `draws` random ControlParams (seeded), using
/// an absolute threshold of 1e-10 on the stacked projected drives.
DecoupledSplit drop_decoupled(const Frame& frame, std::uint64_t seed = 0x5eed, int draws = 5);

/// Raw null space of the cavity coupling. Independent of g > 0.
Frame cavity_null_frame(const ModelConfig& config);

/// Zeno frame: cavity null space with decoupled directions removed, ordered
/// even Pi2 parity first, each parity block in canonical_frame() gauge.
struct ZenoFrame {
  Frame frame;
  Eigen::Index even_dim = 0;  ///< leading columns with Pi2 = +1
  Frame decoupled;            ///< removed directions
};
ZenoFrame zeno_frame(const ModelConfig& config);

/// Off-diagonal block D (odd rows, even columns) of the Zeno-projected drive.
struct EffectiveBlock {
  CMatrix block;
  Frame even;
  Frame odd;
};
EffectiveBlock effective_block(const ModelConfig& config, const ControlParams& params);

struct DarkFrame {
  Frame frame;
  /// True when the columns are the closed-form (D1, D2) pair; otherwise the
  /// columns are in canonical_frame() gauge.
  bool closed_form_gauge = false;
  /// theta at 0 or pi/2 (to 1e-12), where one drive amplitude vanishes.
  bool corner = false;
};

/// Dark frame inside the Zeno frame. For (n, p) = (4, 2) the columns are
/// gauge fixed to the normalized closed-form pair.
DarkFrame dark_frame(const ModelConfig& config, const ControlParams& params);

/// Reusable context for repeated dark-frame solves at one sector: keeps the
/// Zeno frame and the projected drive terms. Coordinates returned by
/// dark_coords() are relative to zeno().frame.
class DarkSolver {
 public:
  explicit DarkSolver(const ModelConfig& config);

  const ModelConfig& config() const { return config_; }
  const ZenoFrame& zeno() const { return zeno_; }
  const BasisPtr& basis() const { return zeno_.frame.basis_ptr(); }
  bool has_closed_form() const;

  /// Zeno-projected drive at `params`.
  CMatrix projected_drive(const ControlParams& params) const;
  /// Numerical null space of the projected drive, in Zeno coordinates.
  CMatrix dark_coords(const ControlParams& params) const;
  /// Gauge-fixed dark frame in Zeno coordinates (closed form for (4,2),
  /// canonical otherwise).
  CMatrix gauge_coords(const ControlParams& params) const;
  /// Embed Zeno coordinates in the sector.
  CMatrix embed(const CMatrix& zeno_coords) const { return zeno_.frame.columns() * zeno_coords; }

 private:
  ModelConfig config_;
  ZenoFrame zeno_;
  CMatrix a_proj_;  // Z^dag a2^dag a1 Z
  CMatrix b_proj_;  // Z^dag b2^dag b1 Z
};

/// The six Zeno basis states written out for (4, 2), columns zeta_1..zeta_6.
CMatrix zeta_states(const BasisPtr& basis);

/// Normalized closed-form dark pair (D1, D2) for (4, 2) as columns in sector
/// coordinates. Throws InvalidArgument for another sector.
CMatrix closed_form_dark_pair(const BasisPtr& basis, const ControlParams& params);

struct DegeneracyRow {
  int n = 0;
  int p = 0;
  Eigen::Index sector_dim = 0;
  Eigen::Index cavity_null_dim = 0;
  Eigen::Index decoupled_dim = 0;
  /// Dark dimension in the Zeno frame (decoupled directions removed).
  Eigen::Index dark_dim = 0;
  /// Zero-energy dimension of the full Hamiltonian on the sector.
  Eigen::Index zero_energy_dim = 0;
  /// Zero-energy dimension of the drive projected on the raw cavity null
  /// space (decoupled directions kept); must agree with zero_energy_dim.
  Eigen::Index zeno_zero_energy_dim = 0;
};

/// Dimensions per (n, p) at a random generic parameter point. n_max <= 7.
std::vector<DegeneracyRow> degeneracy_scan(int n_max, int p_max, std::uint64_t seed = 0x5eed);

}  // namespace zenohol
