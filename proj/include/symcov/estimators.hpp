#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symcov/objectives.hpp"
#include "symcov/symmetry.hpp"

namespace symcov {

/// Iteration control for the reweighted fixed-point scheme. The scheme
/// itself has no stopping rule; relative Frobenius change below tol is
/// used, with a hard iteration cap.
struct FixedPointConfig {
    double tol = 1e-8;
    int max_iter = 500;
    /// Tyler's fixed point is defined only up to scale, so normalization
    /// pins the sequence; MGGD has an absolute scale. Unset picks the
    /// per-kind default (tyler: true, mggd: false).
    std::optional<bool> normalize_each_iter;
    std::optional<Matrix> init;  // identity when unset
};

struct EstimateResult {
    Matrix estimate;
    int iterations = 0;
    double final_relative_change = 0.0;
    std::vector<double> nll_trace;  // one entry per iterate, non-increasing
    bool converged = false;
};

/// (1/n) sum s_i s_i^T. Throws RankDeficient when the result is not
/// positive definite (n < p or degenerate data).
Matrix sample_covariance(const SampleSet& samples);

/// (1/(|K| n)) sum_L sum_i L s_i s_i^T L^T; equals both the plain sample
/// covariance of the symmetrized samples and the group average of the
/// plain sample covariance.
Matrix proper_sample_covariance(const SampleSet& samples, const SymmetryGroup& group);

/// Iterative reweighted scheme Q <- (1/n) sum u(s_i^T Q^{-1} s_i) s_i s_i^T.
/// For the Tyler objective this is the classical Tyler iteration.
EstimateResult fixed_point_estimate(const SampleSet& samples, const RhoObjective& obj,
                                    const FixedPointConfig& cfg = {});

/// The symmetrized scheme: identical to fixed_point_estimate applied to
/// symmetrize_samples(samples, group). The update map sends F(K) to F(K),
/// so every iterate stays invariant when the init is.
EstimateResult constrained_estimate(const SampleSet& samples, const SymmetryGroup& group,
                                    const RhoObjective& obj, const FixedPointConfig& cfg = {});

/// The four estimators of the benchmark, each trace-normalized. A failed
/// estimator is reported in `failures` instead of aborting the rest.
struct FourEstimates {
    std::map<std::string, Matrix> estimates;  // keys: SC, PSC, Tyler, ProperTyler
    std::map<std::string, std::string> failures;
};
FourEstimates estimate_all_four(const SampleSet& samples, const SymmetryGroup& group,
                                const FixedPointConfig& cfg = {});

/// Same grid with an explicit ML objective; the fixed-point estimators are
/// keyed MGGD / ProperMGGD when the objective is MGGD.
FourEstimates estimate_all_four(const SampleSet& samples, const SymmetryGroup& group,
                                const RhoObjective& obj, const FixedPointConfig& cfg);

}  // namespace symcov
