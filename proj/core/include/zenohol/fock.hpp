// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Totally symmetric bosonic sector of two Lambda-atom subensembles plus
 * one cavity mode.
 *
 * Subensemble A holds p atoms, B holds n - p. Atoms within a subensemble are
 * bosons with modes a0, a1, a2 (resp. b0, b1, b2) for the levels |0>, |1>,
 * |2>; c is the cavity photon. The sector fixes both subensemble populations
 * and the excitation number N = n_a1 + n_a2 + n_b1 + n_b2 + n_c = p, so a
 * state is labelled by (n_a1, n_a2, n_b1, n_b2, n_c) and the level-0
 * occupations are derived.
 */

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zenohol/linalg.hpp"

namespace zenohol {

struct SectorConfig {
  int n = 4;  ///< total atom count
  int p = 2;  ///< atoms in subensemble A, equal to the excitation number

  /// Throws InvalidArgument unless 1 <= p <= n and n >= 2.
  void validate() const;
  int b_atoms() const { return n - p; }

  friend auto operator<=>(const SectorConfig&, const SectorConfig&) = default;
};

enum class Mode : int { a0 = 0, a1, a2, b0, b1, b2, c };
inline constexpr int kModeCount = 7;

std::string to_string(Mode mode);

/// Occupation label inside a sector. Ordering is lexicographic on
/// (a1, a2, b1, b2, c), which is the sector's basis order.
struct BasisState {
  int a1 = 0;
  int a2 = 0;
  int b1 = 0;
  int b2 = 0;
  int c = 0;

  int a0(const SectorConfig& cfg) const { return cfg.p - a1 - a2; }
  int b0(const SectorConfig& cfg) const { return cfg.b_atoms() - b1 - b2; }
  int excited_count() const { return a2 + b2; }
  int excitations() const { return a1 + a2 + b1 + b2 + c; }

  /// True when every invariant of the sector holds.
  bool belongs_to(const SectorConfig& cfg) const;

  friend auto operator<=>(const BasisState&, const BasisState&) = default;
};

std::string to_string(const BasisState& s);

/// All seven occupations, with no sector constraint. Used as the building
/// block for ladder algebra and for intermediate products outside a sector.
struct Occupations {
  std::array<int, kModeCount> n{};

  int& operator[](Mode m) { return n[static_cast<int>(m)]; }
  int operator[](Mode m) const { return n[static_cast<int>(m)]; }

  static Occupations from(const BasisState& s, const SectorConfig& cfg);
  BasisState label() const { return {n[1], n[2], n[4], n[5], n[6]}; }

  friend auto operator<=>(const Occupations&, const Occupations&) = default;
};

class SectorBasis {
 public:
  SectorBasis(SectorConfig config, std::vector<BasisState> states);

  const SectorConfig& config() const { return config_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<BasisState>& states() const { return states_; }
  const BasisState& operator[](std::size_t i) const { return states_[i]; }

  std::optional<std::size_t> find(const BasisState& s) const;
  /// Like find() but throws InvalidArgument for a state outside the sector.
  std::size_t index_of(const BasisState& s) const;

  /// Bases of the same config are identical by construction.
  friend bool operator==(const SectorBasis& a, const SectorBasis& b) {
    return a.config_ == b.config_;
  }

 private:
  SectorConfig config_;
  std::vector<BasisState> states_;
  std::map<BasisState, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const SectorBasis>;

/// Every BasisState of the sector, in lexicographic order.
BasisPtr enumerate_basis(const SectorConfig& config);

/// Dense operator expressed in a specific sector basis.
class OperatorMatrix {
 public:
  OperatorMatrix(BasisPtr basis, CMatrix matrix);

  const SectorBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const CMatrix& matrix() const { return matrix_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

 private:
  BasisPtr basis_;
  CMatrix matrix_;
};

/// Dense state expressed in a specific sector basis.
class StateVector {
 public:
  StateVector(BasisPtr basis, CVector amplitudes);

  const SectorBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const CVector& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }
  StateVector normalized() const;

  /// Amplitude on a labelled state; zero if the label is outside the sector.
  Complex amplitude(const BasisState& s) const;

  /// Single occupation state.
  static StateVector basis_state(BasisPtr basis, const BasisState& s);

 private:
  BasisPtr basis_;
  CVector amplitudes_;
};

/// Throws InvalidArgument if the bases differ.
void require_same_basis(const SectorBasis& a, const SectorBasis& b, const char* where);

enum class LadderKind { raise, lower };

struct LadderOp {
  Mode mode;
  LadderKind kind;
};

inline constexpr LadderOp raise(Mode m) { return {m, LadderKind::raise}; }
inline constexpr LadderOp lower(Mode m) { return {m, LadderKind::lower}; }

/// Amplitude and resulting occupations of one ladder operator, or nullopt when
/// it annihilates the state. Standard factors: a|k> = sqrt(k)|k-1>,
/// a^dagger|k> = sqrt(k+1)|k+1>.
struct LadderResult {
  double amplitude;
  Occupations state;
};
std::optional<LadderResult> apply_ladder(LadderOp op, const Occupations& in);

/// Matrix of the ordered product ops[0] ops[1] ... ops[k-1] (rightmost acts
/// first) on the sector. The product must conserve the A population, the B
/// population and the excitation number; anything else is rejected with
/// InvalidArgument since it would leave the sector.
OperatorMatrix bilinear(const BasisPtr& basis, std::span<const LadderOp> ops);
OperatorMatrix bilinear(const BasisPtr& basis, std::initializer_list<LadderOp> ops);

/// m^dagger m
OperatorMatrix number_operator(const BasisPtr& basis, Mode mode);

/// Normalized symmetric Dicke state with p of the n atoms in |1>, in the
/// bosonic representation: amplitude proportional to
/// sqrt(C(p,k) C(n-p,p-k)) on (a1=k, b1=p-k), every other excitation zero.
StateVector dicke_vector(const BasisPtr& basis);

}  // namespace zenohol
