// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace zenohol {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Singular values below this fraction of the largest count as zero.
inline constexpr double kNullTolerance = 1e-10;

/// Orthonormal basis (as columns) of {v : |Mv| <= rel_tol * sigma_max * |v|}.
/// A zero matrix has a full null space; an empty result has zero columns.
CMatrix null_space(const CMatrix& m, double rel_tol = kNullTolerance);

/// Same contract as null_space() for Hermitian input, computed from the
/// eigendecomposition. Faster for the small repeated solves in transport.
/// When `spectrum` is non-null it receives the eigenvalues (ascending).
CMatrix hermitian_null_space(const CMatrix& h, double rel_tol = kNullTolerance,
                             Eigen::VectorXd* spectrum = nullptr);

/// Unitary factor W of the polar decomposition M = W P.
CMatrix unitary_polar_factor(const CMatrix& m);

/// exp(-i H t) for Hermitian H.
CMatrix expm_hermitian(const CMatrix& h, double t);

/// min over alpha of |U - e^{i alpha} V|_F. Global-phase-insensitive distance
/// between equally sized unitaries; at most sqrt(2 dim), i.e. 2 for 2x2.
double projective_distance(const CMatrix& u, const CMatrix& v);

/// Deterministic gauge for the span of `frame`: Gram-Schmidt on the projections
/// of the unit vectors e_0, e_1, ... in order, keeping those with residual
/// above `tol`, each phased so its pivot component is real and positive.
CMatrix canonical_frame(const CMatrix& frame, double tol = 1e-8);

/// |A^dagger A - I|_max
double orthonormality_defect(const CMatrix& a);

}  // namespace zenohol
