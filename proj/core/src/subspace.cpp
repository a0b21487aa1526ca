// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include "zenohol/subspace.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "zenohol/errors.hpp"

namespace zenohol {

namespace {

constexpr double kDecoupledThreshold = 1e-10;
constexpr double kCornerTolerance = 1e-12;

bool is_four_two(const SectorConfig& s) { return s.n == 4 && s.p == 2; }

ControlParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> theta(0.1, std::numbers::pi / 2 - 0.1);
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  ControlParams p;
  p.theta = theta(rng);
  p.phi_a = phase(rng);
  p.phi_b = phase(rng);
  return p;
}

}  // namespace

Frame::Frame(BasisPtr basis, CMatrix columns) : basis_(std::move(basis)), columns_(std::move(columns)) {
  if (columns_.rows() != static_cast<Eigen::Index>(basis_->size())) {
    throw InvalidArgument("frame: column length does not match basis size");
  }
}

double Frame::projector_distance(const Frame& other) const {
  require_same_basis(basis(), other.basis(), "frame projector distance");
  return (projector() - other.projector()).norm();
}

Frame null_space(const OperatorMatrix& op, double rel_tol) {
  return Frame(op.basis_ptr(), null_space(op.matrix(), rel_tol));
}

Frame cavity_null_frame(const ModelConfig& config) {
  config.validate();
  const BasisPtr basis = enumerate_basis(config.sector);
  return null_space(build_cavity_coupling(config, basis));
}

DecoupledSplit drop_decoupled(const Frame& frame, std::uint64_t seed, int draws) {
  const BasisPtr& basis = frame.basis_ptr();
  const Eigen::Index k = frame.dim();
  const Eigen::Index d = frame.ambient_dim();
  if (k == 0) return {frame, Frame(basis, CMatrix(d, 0))};

  const DriveTerms drive(basis);
  std::mt19937_64 rng(seed);
  CMatrix stacked(draws * k, k);
  for (int i = 0; i < draws; ++i) {
    stacked.middleRows(i * k, k) = drive.projected(random_params(rng), frame.columns());
  }

  // Absolute threshold: drive amplitudes are O(Omega) = O(1).
  Eigen::JacobiSVD<CMatrix> svd(stacked, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > kDecoupledThreshold) ++rank;
  const CMatrix removed = svd.matrixV().rightCols(k - rank);
  const CMatrix kept = svd.matrixV().leftCols(rank);
  return {Frame(basis, frame.columns() * kept), Frame(basis, frame.columns() * removed)};
}

ZenoFrame zeno_frame(const ModelConfig& config) {
  const Frame raw = cavity_null_frame(config);
  DecoupledSplit split = drop_decoupled(raw);
  const BasisPtr& basis = raw.basis_ptr();
  const CMatrix& f = split.kept.columns();

  // The cavity null space is Pi2-invariant since Pi2 anticommutes with H_g.
  const CMatrix parity = f.adjoint() * build_excited_parity(basis).matrix() * f;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(parity);
  std::vector<Eigen::Index> even, odd;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    const double w = eig.eigenvalues()(i);
    if (std::abs(std::abs(w) - 1.0) > 1e-8) {
      throw NumericalError("zeno frame: parity does not restrict to the frame (eigenvalue " +
                           message_number(w) + ")");
    }
    (w > 0 ? even : odd).push_back(i);
  }
  auto gather = [&](const std::vector<Eigen::Index>& idx) {
    CMatrix m(f.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      m.col(static_cast<Eigen::Index>(j)) = f * eig.eigenvectors().col(idx[j]);
    }
    return canonical_frame(m);
  };
  const CMatrix e = gather(even);
  const CMatrix o = gather(odd);
  CMatrix cols(f.rows(), e.cols() + o.cols());
  cols << e, o;
  return {Frame(basis, std::move(cols)), e.cols(), std::move(split.removed)};
}

EffectiveBlock effective_block(const ModelConfig& config, const ControlParams& params) {
  const ZenoFrame z = zeno_frame(config);
  const BasisPtr& basis = z.frame.basis_ptr();
  const Eigen::Index m = z.frame.dim();
  const CMatrix even = z.frame.columns().leftCols(z.even_dim);
  const CMatrix odd = z.frame.columns().rightCols(m - z.even_dim);
  const CMatrix h = build_drive(params, basis).matrix();
  return {odd.adjoint() * h * even, Frame(basis, even), Frame(basis, odd)};
}

DarkSolver::DarkSolver(const ModelConfig& config) : config_(config), zeno_(zeno_frame(config)) {
  const CMatrix& z = zeno_.frame.columns();
  a_proj_ = z.adjoint() * bilinear(basis(), {raise(Mode::a2), lower(Mode::a1)}).matrix() * z;
  b_proj_ = z.adjoint() * bilinear(basis(), {raise(Mode::b2), lower(Mode::b1)}).matrix() * z;
}

bool DarkSolver::has_closed_form() const { return is_four_two(config_.sector); }

CMatrix DarkSolver::projected_drive(const ControlParams& params) const {
  const CMatrix m = params.omega_a() * a_proj_ + params.omega_b() * b_proj_;
  return m + m.adjoint();
}

CMatrix DarkSolver::dark_coords(const ControlParams& params) const {
  return hermitian_null_space(projected_drive(params));
}

CMatrix DarkSolver::gauge_coords(const ControlParams& params) const {
  if (has_closed_form()) {
    // The closed-form pair lies in the Zeno span and stays regular at the
    // corners, where the numerical null space grows.
    return zeno_.frame.columns().adjoint() * closed_form_dark_pair(basis(), params);
  }
  return zeno_.frame.columns().adjoint() * canonical_frame(embed(dark_coords(params)));
}

DarkFrame dark_frame(const ModelConfig& config, const ControlParams& params) {
  const DarkSolver solver(config);
  const CMatrix coords = solver.gauge_coords(params);
  const double s = std::sin(params.theta);
  const double c = std::cos(params.theta);
  DarkFrame out{Frame(solver.basis(), solver.embed(coords)),
                solver.has_closed_form(),
                std::abs(s) < kCornerTolerance || std::abs(c) < kCornerTolerance};
  return out;
}

CMatrix zeta_states(const BasisPtr& basis) {
  if (!is_four_two(basis->config())) {
    throw InvalidArgument("zeta states are defined for (n, p) = (4, 2) only");
  }
  auto ket = [&](int a1, int a2, int b1, int b2) {
    return StateVector::basis_state(basis, {a1, a2, b1, b2, 0}).amplitudes();
  };
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  CMatrix z(static_cast<Eigen::Index>(basis->size()), 6);
  z.col(0) = ket(0, 0, 2, 0);
  z.col(1) = ket(1, 0, 1, 0);
  z.col(2) = ket(2, 0, 0, 0);
  z.col(3) = (ket(0, 0, 0, 2) - ket(0, 1, 0, 1) + ket(0, 2, 0, 0)) / r3;
  z.col(4) = (ket(0, 1, 1, 0) - r2 * ket(0, 0, 1, 1)) / r3;
  z.col(5) = (ket(1, 0, 0, 1) - r2 * ket(1, 1, 0, 0)) / r3;
  return z;
}

CMatrix closed_form_dark_pair(const BasisPtr& basis, const ControlParams& params) {
  const CMatrix z = zeta_states(basis);
  const Complex wa = params.omega_a();
  const Complex wb = params.omega_b();
  const double na = std::norm(wa);
  const double nb = std::norm(wb);
  const double r3 = std::sqrt(3.0);

  CVector d1 = z.col(0) * wa * wa + z.col(1) * 2.0 * wa * wb + z.col(2) * wb * wb;
  CVector d2 = z.col(0) * r3 * std::conj(wb * wb) * (3 * na + nb) -
               z.col(1) * 2.0 * r3 * std::conj(wa * wb) * (na + nb) +
               z.col(2) * r3 * std::conj(wa * wa) * (na + 3 * nb) -
               z.col(3) * 2.0 * (na * na + 4 * na * nb + nb * nb);
  const double n1 = d1.norm();
  const double n2 = d2.norm();
  if (n1 == 0.0 || n2 == 0.0) throw InvalidArgument("closed-form dark pair needs a nonzero drive");
  CMatrix out(z.rows(), 2);
  out.col(0) = d1 / n1;
  out.col(1) = d2 / n2;
  return out;
}

std::vector<DegeneracyRow> degeneracy_scan(int n_max, int p_max, std::uint64_t seed) {
  if (n_max < 2 || n_max > 7) throw InvalidArgument("degeneracy scan: need 2 <= n_max <= 7");
  if (p_max < 1) throw InvalidArgument("degeneracy scan: need p_max >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> gdist(2.0, 20.0);
  std::vector<DegeneracyRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    for (int p = 1; p <= std::min(n, p_max); ++p) {
      const ModelConfig cfg{{n, p}, gdist(rng)};
      const ControlParams params = random_params(rng);
      const BasisPtr basis = enumerate_basis(cfg.sector);
      const Frame raw = null_space(build_cavity_coupling(cfg, basis));
      const DecoupledSplit split = drop_decoupled(raw, seed ^ static_cast<std::uint64_t>(n * 31 + p));
      const DriveTerms drive(basis);

      auto zero_modes = [&](const CMatrix& frame) -> Eigen::Index {
        if (frame.cols() == 0) return 0;
        return hermitian_null_space(drive.projected(params, frame)).cols();
      };

      DegeneracyRow row;
      row.n = n;
      row.p = p;
      row.sector_dim = static_cast<Eigen::Index>(basis->size());
      row.cavity_null_dim = raw.dim();
      row.decoupled_dim = split.removed.dim();
      row.dark_dim = zero_modes(split.kept.columns());
      row.zeno_zero_energy_dim = zero_modes(raw.columns());
      row.zero_energy_dim = hermitian_null_space(build_hamiltonian(cfg, params, basis).matrix()).cols();
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace zenohol
