#include "symcov/spd.hpp"

#include <cmath>

namespace symcov {

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void require_symmetric(const Matrix& m, double rel_tol) {
    if (m.rows() != m.cols()) {
        throw InvalidInput("matrix is not square: " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()));
    }
    const double scale = std::max(1.0, max_abs(m));
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > rel_tol * scale) {
        throw InvalidInput("matrix is not symmetric (residual " + std::to_string(asym) + ")");
    }
}

}  // namespace

SymEigPair sym_eig(const Matrix& m) {
    require_symmetric(m, 1e-9);
    Eigen::SelfAdjointEigenSolver<Matrix> es(resymmetrize(m));
    if (es.info() != Eigen::Success) {
        throw InvalidInput("eigendecomposition failed to converge");
    }
    return {es.eigenvalues(), es.eigenvectors()};
}

Matrix spd_power(const Matrix& q, double t) {
    const SymEigPair eig = sym_eig(q);
    const double lmax = eig.eigenvalues.maxCoeff();
    if (eig.eigenvalues.minCoeff() <= kEigenvalueFloor * std::max(lmax, 0.0)) {
        throw NotPositiveDefinite("eigenvalue " + std::to_string(eig.eigenvalues.minCoeff()) +
                                  " below floor");
    }
    Vector powered = eig.eigenvalues.array().pow(t);
    return resymmetrize(eig.eigenvectors * powered.asDiagonal() * eig.eigenvectors.transpose());
}

Matrix geodesic(const Matrix& q0, const Matrix& q1, double t) {
    if (q0.rows() != q1.rows() || q0.cols() != q1.cols()) {
        throw DimMismatch("geodesic endpoints have different dimensions");
    }
    if (t < 0.0 || t > 1.0) {
        throw InvalidInput("geodesic parameter must lie in [0,1]");
    }
    const Matrix root = spd_power(q0, 0.5);
    const Matrix inv_root = spd_power(q0, -0.5);
    const Matrix inner = resymmetrize(inv_root * q1 * inv_root);
    return resymmetrize(root * spd_power(inner, t) * root);
}

Matrix trace_normalize(const Matrix& q) {
    const double tr = q.trace();
    if (!(tr > 0.0)) {
        throw InvalidInput("trace must be positive for normalization");
    }
    return q * (static_cast<double>(q.rows()) / tr);
}

bool is_spd(const Matrix& m, double tol) {
    if (m.rows() != m.cols() || m.size() == 0) return false;
    const double scale = std::max(1.0, max_abs(m));
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol * scale) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(resymmetrize(m));
    if (es.info() != Eigen::Success) return false;
    return es.eigenvalues().minCoeff() > tol * scale;
}

}  // namespace symcov
