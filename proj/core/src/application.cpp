// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include "zenohol/application.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "zenohol/errors.hpp"

namespace zenohol {

namespace {

using Sparse = std::map<Occupations, Complex>;

// Amplitudes below this are pruned from the sparse expansion.
constexpr double kPrune = 1e-300;

Sparse apply(const Sparse& in, std::initializer_list<LadderOp> ops, Complex coeff) {
  Sparse out;
  for (const auto& [occ, amp] : in) {
    Occupations cur = occ;
    double a = 1.0;
    bool alive = true;
    // Rightmost operator acts first.
    for (auto it = std::rbegin(ops); it != std::rend(ops); ++it) {
      auto r = apply_ladder(*it, cur);
      if (!r) {
        alive = false;
        break;
      }
      a *= r->amplitude;
      cur = r->state;
    }
    if (alive) out[cur] += coeff * a * amp;
  }
  return out;
}

Sparse add(Sparse a, const Sparse& b) {
  for (const auto& [occ, amp] : b) a[occ] += amp;
  std::erase_if(a, [](const auto& kv) { return std::abs(kv.second) <= kPrune; });
  return a;
}

// (amp0 x0^dag - g c x1^dag) applied `times` times.
Sparse apply_factor(Sparse psi, Mode ground, Mode level1, Complex amp0, double g, int times) {
  for (int k = 0; k < times; ++k) {
    psi = add(apply(psi, {raise(ground)}, amp0), apply(psi, {lower(Mode::c), raise(level1)}, -g));
  }
  return psi;
}

}  // namespace

StateVector build_e_state(const EStateSpec& spec) {
  spec.model.validate();
  const SectorConfig& cfg = spec.model.sector;
  const auto basis = enumerate_basis(cfg);

  Sparse psi{{Occupations{}, Complex(1.0)}};
  for (int k = 0; k < cfg.p; ++k) psi = apply(psi, {raise(Mode::c)}, 1.0);
  psi = apply_factor(std::move(psi), Mode::b0, Mode::b1, spec.params.omega_b(), spec.model.g,
                     cfg.b_atoms());
  psi = apply_factor(std::move(psi), Mode::a0, Mode::a1, spec.params.omega_a(), spec.model.g, cfg.p);

  CVector amps = CVector::Zero(static_cast<Eigen::Index>(basis->size()));
  for (const auto& [occ, amp] : psi) {
    const BasisState label = occ.label();
    const auto idx = basis->find(label);
    if (!idx || occ != Occupations::from(label, cfg)) {
      throw NumericalError("E-state expansion left the sector at " + to_string(label));
    }
    amps(static_cast<Eigen::Index>(*idx)) += amp;
  }
  return StateVector(basis, std::move(amps));
}

StateVector zero_photon_projection(const StateVector& psi) {
  CVector amps = psi.amplitudes();
  for (std::size_t i = 0; i < psi.basis().size(); ++i) {
    if (psi.basis()[i].c != 0) amps(static_cast<Eigen::Index>(i)) = 0.0;
  }
  return StateVector(psi.basis_ptr(), std::move(amps));
}

DickeOverlap dicke_overlap(const StateVector& psi) {
  if (!(psi.norm() > 0.0)) throw InvalidArgument("Dicke fidelity of a zero-norm state");
  const StateVector target = dicke_vector(psi.basis_ptr()).normalized();
  const double amp = std::abs(target.amplitudes().dot(psi.normalized().amplitudes()));
  return {amp * amp, amp};
}

double dicke_fidelity(const StateVector& psi) { return dicke_overlap(psi).fidelity; }

DickePreparation prepare_dicke_holonomic(int m_a, int m_b, double theta_1, HolonomyMethod method,
                                         const TransportOptions& options) {
  const ModelConfig config{};
  const auto path = w_prime_path(m_a, m_b, theta_1);
  HolonomyResult hol =
      method == HolonomyMethod::closed_form ? closed_form(path, config) : transport(path, config, options);

  const auto basis = hol.frame_in.basis_ptr();
  const CVector start = StateVector::basis_state(basis, {2, 0, 0, 0, 0}).amplitudes();
  const CVector coords = hol.frame_in.columns().adjoint() * start;
  if (std::abs(coords.norm() - 1.0) > 1e-10) {
    throw NumericalError("|2000,0> is not in the dark space at theta = 0");
  }
  StateVector final_state(basis, hol.frame_out.columns() * (hol.u * coords));
  const DickeOverlap overlap = dicke_overlap(final_state);
  return {std::move(hol), std::move(final_state), overlap};
}

std::vector<DickeCandidate> search_dicke_path(const DickeSearchGrid& grid) {
  if (grid.m_a_min > grid.m_a_max || grid.m_b_min > grid.m_b_max) {
    throw InvalidArgument("Dicke search grid has an empty winding range");
  }
  if (grid.thetas.empty()) throw InvalidArgument("Dicke search grid has no theta values");
  for (double t : grid.thetas) {
    if (!(t >= 0.0 && t <= std::numbers::pi / 2)) {
      throw InvalidArgument("Dicke search theta outside [0, pi/2]");
    }
  }
  std::vector<DickeCandidate> out;
  for (int ma = grid.m_a_min; ma <= grid.m_a_max; ++ma) {
    for (int mb = grid.m_b_min; mb <= grid.m_b_max; ++mb) {
      for (double t : grid.thetas) {
        // D1 is |2000,0> at theta = 0 and the Dicke state at pi/4.
        const double f = std::norm(closed_form_w_prime(ma, mb, t)(0, 0));
        out.push_back({ma, mb, t, f});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const DickeCandidate& a, const DickeCandidate& b) {
    if (a.fidelity != b.fidelity) return a.fidelity > b.fidelity;
    return std::tie(a.m_a, a.m_b, a.theta_1) < std::tie(b.m_a, b.m_b, b.theta_1);
  });
  return out;
}

}  // namespace zenohol
