// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include "zenohol/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "zenohol/errors.hpp"

namespace zenohol {

CMatrix null_space(const CMatrix& m, double rel_tol) {
  const Eigen::Index cols = m.cols();
  if (cols == 0) return CMatrix(0, 0);
  if (m.rows() == 0) return CMatrix::Identity(cols, cols);

  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  if (smax > 0.0) {
    while (rank < sv.size() && sv(rank) > rel_tol * smax) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank);
}

CMatrix hermitian_null_space(const CMatrix& h, double rel_tol, Eigen::VectorXd* spectrum) {
  const Eigen::Index n = h.rows();
  if (n == 0) return CMatrix(0, 0);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const Eigen::VectorXd& w = eig.eigenvalues();
  if (spectrum) *spectrum = w;
  const double wmax = w.cwiseAbs().maxCoeff();

  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (wmax == 0.0 || std::abs(w(i)) <= rel_tol * wmax) keep.push_back(i);
  }
  CMatrix out(n, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = eig.eigenvectors().col(keep[k]);
  }
  return out;
}

CMatrix unitary_polar_factor(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

CMatrix expm_hermitian(const CMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const CVector phases =
      (eig.eigenvalues().cast<Complex>() * Complex(0.0, -t)).array().exp().matrix();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

double projective_distance(const CMatrix& u, const CMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw InvalidArgument("projective_distance needs equally sized matrices");
  }
  // Minimized at a = arg tr(V^dag U). Evaluated directly: the expanded form
  // |U|^2 + |V|^2 - 2|tr| cancels down to a sqrt(eps) floor.
  const Complex overlap = (v.adjoint() * u).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (u - phase * v).norm();
}

CMatrix canonical_frame(const CMatrix& frame, double tol) {
  const Eigen::Index d = frame.rows();
  const Eigen::Index k = frame.cols();
  CMatrix out(d, k);
  Eigen::Index found = 0;
  for (Eigen::Index i = 0; i < d && found < k; ++i) {
    // P e_i = F (F^dag e_i) = F * conj(row i of F)^T
    CVector r = frame * frame.row(i).adjoint();
    for (Eigen::Index j = 0; j < found; ++j) {
      r -= out.col(j) * out.col(j).dot(r);
    }
    const double nr = r.norm();
    if (nr <= tol) continue;
    r /= nr;
    const Complex pivot = r(i);
    r *= std::conj(pivot) / std::abs(pivot);
    out.col(found++) = r;
  }
  return out.leftCols(found);
}

double orthonormality_defect(const CMatrix& a) {
  if (a.cols() == 0) return 0.0;
  return (a.adjoint() * a - CMatrix::Identity(a.cols(), a.cols())).cwiseAbs().maxCoeff();
}

}  // namespace zenohol
