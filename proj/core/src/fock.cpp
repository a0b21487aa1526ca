// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include "zenohol/fock.hpp"

#include <cmath>
#include <sstream>

#include "zenohol/errors.hpp"

namespace zenohol {

void SectorConfig::validate() const {
  if (n < 2) throw InvalidArgument("sector: n must be >= 2, got " + std::to_string(n));
  if (p < 1 || p > n) {
    throw InvalidArgument("sector: p must satisfy 1 <= p <= n, got n=" + std::to_string(n) +
                          " p=" + std::to_string(p));
  }
}

std::string to_string(Mode mode) {
  static constexpr const char* kNames[kModeCount] = {"a0", "a1", "a2", "b0", "b1", "b2", "c"};
  return kNames[static_cast<int>(mode)];
}

bool BasisState::belongs_to(const SectorConfig& cfg) const {
  if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0 || c < 0) return false;
  return a0(cfg) >= 0 && b0(cfg) >= 0 && excitations() == cfg.p;
}

std::string to_string(const BasisState& s) {
  std::ostringstream os;
  os << '|' << s.a1 << s.a2 << s.b1 << s.b2 << ',' << s.c << '>';
  return os.str();
}

Occupations Occupations::from(const BasisState& s, const SectorConfig& cfg) {
  Occupations o;
  o.n = {s.a0(cfg), s.a1, s.a2, s.b0(cfg), s.b1, s.b2, s.c};
  return o;
}

SectorBasis::SectorBasis(SectorConfig config, std::vector<BasisState> states)
    : config_(config), states_(std::move(states)) {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    auto [it, inserted] = index_.emplace(states_[i], i);
    if (!inserted) throw InvalidArgument("sector basis: duplicate state " + to_string(states_[i]));
    if (i > 0 && !(states_[i - 1] < states_[i])) {
      throw InvalidArgument("sector basis: states must be strictly ascending");
    }
  }
}

std::optional<std::size_t> SectorBasis::find(const BasisState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SectorBasis::index_of(const BasisState& s) const {
  if (auto i = find(s)) return *i;
  throw InvalidArgument("state " + to_string(s) + " is outside the (n=" +
                        std::to_string(config_.n) + ", p=" + std::to_string(config_.p) +
                        ") sector");
}

BasisPtr enumerate_basis(const SectorConfig& config) {
  config.validate();
  const int p = config.p;
  const int nb = config.b_atoms();
  std::vector<BasisState> states;
  // Nested ascending loops emit lexicographic order directly.
  for (int a1 = 0; a1 <= p; ++a1)
    for (int a2 = 0; a1 + a2 <= p; ++a2)
      for (int b1 = 0; b1 <= nb && a1 + a2 + b1 <= p; ++b1)
        for (int b2 = 0; b1 + b2 <= nb && a1 + a2 + b1 + b2 <= p; ++b2) {
          states.push_back({a1, a2, b1, b2, p - a1 - a2 - b1 - b2});
        }
  return std::make_shared<const SectorBasis>(config, std::move(states));
}

OperatorMatrix::OperatorMatrix(BasisPtr basis, CMatrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(basis_->size());
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw InvalidArgument("operator matrix: dimension does not match basis size");
  }
}

StateVector::StateVector(BasisPtr basis, CVector amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != static_cast<Eigen::Index>(basis_->size())) {
    throw InvalidArgument("state vector: dimension does not match basis size");
  }
}

StateVector StateVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw InvalidArgument("cannot normalize a zero state");
  return StateVector(basis_, amplitudes_ / nrm);
}

Complex StateVector::amplitude(const BasisState& s) const {
  if (auto i = basis_->find(s)) return amplitudes_(static_cast<Eigen::Index>(*i));
  return 0.0;
}

StateVector StateVector::basis_state(BasisPtr basis, const BasisState& s) {
  const auto i = basis->index_of(s);
  CVector v = CVector::Zero(static_cast<Eigen::Index>(basis->size()));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return StateVector(std::move(basis), std::move(v));
}

void require_same_basis(const SectorBasis& a, const SectorBasis& b, const char* where) {
  if (!(a == b)) throw InvalidArgument(std::string(where) + ": basis mismatch");
}

std::optional<LadderResult> apply_ladder(LadderOp op, const Occupations& in) {
  LadderResult out{1.0, in};
  int& k = out.state[op.mode];
  if (op.kind == LadderKind::lower) {
    if (k == 0) return std::nullopt;
    out.amplitude = std::sqrt(static_cast<double>(k));
    --k;
  } else {
    ++k;
    out.amplitude = std::sqrt(static_cast<double>(k));
  }
  return out;
}

namespace {

struct Transfer {
  int pop_a = 0;
  int pop_b = 0;
  int excitation = 0;
};

Transfer transfer_of(LadderOp op) {
  const int s = op.kind == LadderKind::raise ? 1 : -1;
  switch (op.mode) {
    case Mode::a0: return {s, 0, 0};
    case Mode::a1:
    case Mode::a2: return {s, 0, s};
    case Mode::b0: return {0, s, 0};
    case Mode::b1:
    case Mode::b2: return {0, s, s};
    case Mode::c: return {0, 0, s};
  }
  return {};
}

}  // namespace

OperatorMatrix bilinear(const BasisPtr& basis, std::span<const LadderOp> ops) {
  Transfer net;
  for (const auto& op : ops) {
    const Transfer t = transfer_of(op);
    net.pop_a += t.pop_a;
    net.pop_b += t.pop_b;
    net.excitation += t.excitation;
  }
  if (net.pop_a != 0 || net.pop_b != 0 || net.excitation != 0) {
    std::string desc;
    for (const auto& op : ops) {
      desc += to_string(op.mode) + (op.kind == LadderKind::raise ? "^dag " : " ");
    }
    throw InvalidArgument("ladder product '" + desc +
                          "' does not conserve subensemble populations and excitation number");
  }

  const SectorConfig& cfg = basis->config();
  const auto d = static_cast<Eigen::Index>(basis->size());
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    Occupations occ = Occupations::from((*basis)[static_cast<std::size_t>(j)], cfg);
    double amp = 1.0;
    bool alive = true;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      auto r = apply_ladder(*it, occ);
      if (!r) {
        alive = false;
        break;
      }
      amp *= r->amplitude;
      occ = r->state;
    }
    if (!alive) continue;
    // Conserved transfers keep the target inside the sector.
    const auto i = basis->index_of(occ.label());
    m(static_cast<Eigen::Index>(i), j) += amp;
  }
  return OperatorMatrix(basis, std::move(m));
}

OperatorMatrix bilinear(const BasisPtr& basis, std::initializer_list<LadderOp> ops) {
  return bilinear(basis, std::span<const LadderOp>(ops.begin(), ops.size()));
}

// Diagonal filled from the occupations so the entries are exact integers;
// the ladder product would give sqrt(n)^2 with rounding.
OperatorMatrix number_operator(const BasisPtr& basis, Mode mode) {
  const auto d = static_cast<Eigen::Index>(basis->size());
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    m(i, i) = Occupations::from((*basis)[static_cast<std::size_t>(i)], basis->config())[mode];
  }
  return OperatorMatrix(basis, std::move(m));
}

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

StateVector dicke_vector(const BasisPtr& basis) {
  const SectorConfig& cfg = basis->config();
  const int p = cfg.p;
  const int nb = cfg.b_atoms();
  CVector v = CVector::Zero(static_cast<Eigen::Index>(basis->size()));
  for (int k = 0; k <= p; ++k) {
    const double w = binomial(p, k) * binomial(nb, p - k);
    if (w == 0.0) continue;
    const auto i = basis->index_of({k, 0, p - k, 0, 0});
    v(static_cast<Eigen::Index>(i)) = std::sqrt(w);
  }
  return StateVector(basis, v / v.norm());
}

}  // namespace zenohol
