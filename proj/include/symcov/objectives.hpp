#pragma once

#include <functional>
#include <vector>

#include "symcov/samples.hpp"
#include "symcov/spd.hpp"

namespace symcov {

/// Per-sample loss rho and its derivative weight u = rho'.
/// Tyler: rho(x) = p log x. MGGD: rho(x) = x^beta with 0 < beta <= 1
/// (the geodesically convex regime; larger beta is rejected).
class RhoObjective {
  public:
    enum class Kind { tyler, mggd };

    static RhoObjective tyler(Eigen::Index dim);
    static RhoObjective mggd(double beta);

    Kind kind() const { return kind_; }
    Eigen::Index dim() const { return dim_; }
    double beta() const { return beta_; }

    double rho(double x) const;
    /// u(x) = rho'(x); x must be positive.
    double weight(double x) const;

  private:
    RhoObjective(Kind kind, Eigen::Index dim, double beta)
        : kind_(kind), dim_(dim), beta_(beta) {}

    Kind kind_;
    Eigen::Index dim_;   // tyler only
    double beta_ = 1.0;  // mggd only
};

/// (p/n) sum log(x_i^T Q^{-1} x_i) + log det Q.
double tyler_nll(const SampleSet& samples, const Matrix& q);

/// (1/n) sum (x_i^T Q^{-1} x_i)^beta + log det Q.
double mggd_nll(const SampleSet& samples, const Matrix& q, double beta);

/// (1/n) sum rho(x_i^T Q^{-1} x_i) + log det Q; matches the specific
/// objectives exactly for the corresponding kind.
double generic_nll(const SampleSet& samples, const Matrix& q, const RhoObjective& obj);

/// Quadratic forms x_i^T Q^{-1} x_i via one Cholesky solve reused across
/// samples, plus log det Q. Throws NotPositiveDefinite when Q is not SPD.
struct QuadraticForms {
    Vector values;       // one per sample, all positive
    double log_det = 0;  // log det Q
};
QuadraticForms quadratic_forms(const SampleSet& samples, const Matrix& q);

/// Chord inequality f(Q_t) <= (1-t) f(Q0) + t f(Q1) + slack at every grid
/// point, with Q_t the geodesic (Q0 at t=0).
bool midpoint_convexity_check(const std::function<double(const Matrix&)>& objective,
                              const Matrix& q0, const Matrix& q1,
                              const std::vector<double>& grid, double slack = 1e-9);

}  // namespace symcov
