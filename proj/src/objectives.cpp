#include "symcov/objectives.hpp"

#include <cmath>

namespace symcov {

RhoObjective RhoObjective::tyler(Eigen::Index dim) {
    if (dim < 1) throw InvalidInput("tyler objective requires dim >= 1");
    return RhoObjective(Kind::tyler, dim, 1.0);
}

RhoObjective RhoObjective::mggd(double beta) {
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw InvalidShape("mggd shape must satisfy 0 < beta <= 1, got " + std::to_string(beta));
    }
    return RhoObjective(Kind::mggd, 0, beta);
}

double RhoObjective::rho(double x) const {
    if (!(x > 0.0)) throw InvalidInput("rho argument must be positive");
    return kind_ == Kind::tyler ? static_cast<double>(dim_) * std::log(x) : std::pow(x, beta_);
}

double RhoObjective::weight(double x) const {
    if (!(x > 0.0)) throw InvalidInput("weight argument must be positive");
    return kind_ == Kind::tyler ? static_cast<double>(dim_) / x
                                : beta_ * std::pow(x, beta_ - 1.0);
}

QuadraticForms quadratic_forms(const SampleSet& samples, const Matrix& q) {
    if (q.rows() != samples.dim() || q.cols() != samples.dim()) {
        throw DimMismatch("covariance dimension does not match sample dimension");
    }
    Eigen::LLT<Matrix> llt(resymmetrize(q));
    if (llt.info() != Eigen::Success) {
        throw NotPositiveDefinite("Cholesky factorization failed; matrix is not SPD");
    }
    const Matrix solved = llt.solve(samples.data());
    QuadraticForms forms;
    forms.values = (samples.data().array() * solved.array()).colwise().sum();
    forms.log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    if (forms.values.minCoeff() <= 0.0) {
        throw NotPositiveDefinite("nonpositive quadratic form; matrix is numerically singular");
    }
    return forms;
}

double tyler_nll(const SampleSet& samples, const Matrix& q) {
    const QuadraticForms forms = quadratic_forms(samples, q);
    const double p = static_cast<double>(samples.dim());
    const double n = static_cast<double>(samples.count());
    return (p / n) * forms.values.array().log().sum() + forms.log_det;
}

double mggd_nll(const SampleSet& samples, const Matrix& q, double beta) {
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw InvalidShape("mggd shape must satisfy 0 < beta <= 1");
    }
    const QuadraticForms forms = quadratic_forms(samples, q);
    const double n = static_cast<double>(samples.count());
    return forms.values.array().pow(beta).sum() / n + forms.log_det;
}

double generic_nll(const SampleSet& samples, const Matrix& q, const RhoObjective& obj) {
    const QuadraticForms forms = quadratic_forms(samples, q);
    const double n = static_cast<double>(samples.count());
    double sum = 0.0;
    for (Eigen::Index i = 0; i < forms.values.size(); ++i) {
        sum += obj.rho(forms.values[i]);
    }
    return sum / n + forms.log_det;
}

bool midpoint_convexity_check(const std::function<double(const Matrix&)>& objective,
                              const Matrix& q0, const Matrix& q1,
                              const std::vector<double>& grid, double slack) {
    const double f0 = objective(q0);
    const double f1 = objective(q1);
    for (double t : grid) {
        if (t < 0.0 || t > 1.0) throw InvalidInput("grid values must lie in [0,1]");
        const double chord = (1.0 - t) * f0 + t * f1;
        if (objective(geodesic(q0, q1, t)) > chord + slack) return false;
    }
    return true;
}

}  // namespace symcov
