#pragma once

#include <Eigen/Dense>

#include "symcov/errors.hpp"

namespace symcov {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Spectral decomposition of a symmetric matrix, eigenvalues ascending.
struct SymEigPair {
    Vector eigenvalues;   // ascending
    Matrix eigenvectors;  // columns, orthonormal
};

/// Relative floor below which an eigenvalue counts as non-positive.
inline constexpr double kEigenvalueFloor = 1e-13;

/// (M + M^T)/2. Applied after composite products to stop symmetry drift.
inline Matrix resymmetrize(const Matrix& m) { return 0.5 * (m + m.transpose()); }

/// Spectral decomposition of a symmetric matrix.
/// Throws InvalidInput for non-square or asymmetric input.
SymEigPair sym_eig(const Matrix& m);

/// Q^t = V diag(lambda_i^t) V^T for SPD Q and any real t.
/// Throws NotPositiveDefinite if an eigenvalue falls below the floor.
Matrix spd_power(const Matrix& q, double t);

/// The geodesic Q0^{1/2} (Q0^{-1/2} Q1 Q0^{-1/2})^t Q0^{1/2}, t in [0,1].
Matrix geodesic(const Matrix& q0, const Matrix& q1, double t);

/// Rescale Q so that trace(Q) = p (identity is a fixed point of the convention).
Matrix trace_normalize(const Matrix& q);

/// True iff M is symmetric within tol and its smallest eigenvalue
/// exceeds tol * max(1, max|M|).
bool is_spd(const Matrix& m, double tol = 1e-10);

}  // namespace symcov
