#include "symcov/estimators.hpp"

#include <cmath>

namespace symcov {

namespace {

void require_pd_iterate(const Matrix& q, const char* what) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(q);
    const double lmax = es.eigenvalues().maxCoeff();
    if (es.eigenvalues().minCoeff() <= kEigenvalueFloor * std::max(lmax, 0.0)) {
        throw RankDeficient(std::string(what) + " is rank deficient (smallest eigenvalue " +
                            std::to_string(es.eigenvalues().minCoeff()) + ")");
    }
}

}  // namespace

Matrix sample_covariance(const SampleSet& samples) {
    const Matrix cov = resymmetrize(samples.data() * samples.data().transpose() /
                                    static_cast<double>(samples.count()));
    require_pd_iterate(cov, "sample covariance");
    return cov;
}

Matrix proper_sample_covariance(const SampleSet& samples, const SymmetryGroup& group) {
    return sample_covariance(symmetrize_samples(samples, group));
}

EstimateResult fixed_point_estimate(const SampleSet& samples, const RhoObjective& obj,
                                    const FixedPointConfig& cfg) {
    if (obj.kind() == RhoObjective::Kind::tyler && obj.dim() != samples.dim()) {
        throw DimMismatch("tyler objective dimension does not match sample dimension");
    }
    if (cfg.tol <= 0.0 || cfg.max_iter < 1) {
        throw InvalidInput("fixed-point config requires tol > 0 and max_iter >= 1");
    }
    const bool normalize = cfg.normalize_each_iter.value_or(
        obj.kind() == RhoObjective::Kind::tyler);
    const Eigen::Index p = samples.dim();
    const double n = static_cast<double>(samples.count());

    Matrix q = cfg.init ? *cfg.init : Matrix::Identity(p, p);
    if (q.rows() != p || q.cols() != p) {
        throw DimMismatch("initial matrix dimension does not match samples");
    }

    EstimateResult result;
    for (int k = 0; k < cfg.max_iter; ++k) {
        const QuadraticForms forms = quadratic_forms(samples, q);

        double rho_sum = 0.0;
        Vector weights(forms.values.size());
        for (Eigen::Index i = 0; i < forms.values.size(); ++i) {
            rho_sum += obj.rho(forms.values[i]);
            weights[i] = obj.weight(forms.values[i]) / n;
        }
        result.nll_trace.push_back(rho_sum / n + forms.log_det);

        Matrix next = resymmetrize(samples.data() * weights.asDiagonal() *
                                   samples.data().transpose());
        require_pd_iterate(next, "fixed-point iterate");
        if (normalize) next = trace_normalize(next);

        result.final_relative_change = (next - q).norm() / q.norm();
        q = std::move(next);
        result.iterations = k + 1;
        if (result.final_relative_change < cfg.tol) {
            result.converged = true;
            break;
        }
    }

    result.nll_trace.push_back(generic_nll(samples, q, obj));
    result.estimate = std::move(q);
    return result;
}

EstimateResult constrained_estimate(const SampleSet& samples, const SymmetryGroup& group,
                                    const RhoObjective& obj, const FixedPointConfig& cfg) {
    return fixed_point_estimate(symmetrize_samples(samples, group), obj, cfg);
}

FourEstimates estimate_all_four(const SampleSet& samples, const SymmetryGroup& group,
                                const RhoObjective& obj, const FixedPointConfig& cfg) {
    FourEstimates out;
    const bool tyler = obj.kind() == RhoObjective::Kind::tyler;

    auto attempt = [&](const std::string& name, auto&& compute) {
        try {
            out.estimates.emplace(name, trace_normalize(compute()));
        } catch (const Error& e) {
            out.failures.emplace(name, e.what());
        }
    };

    attempt("SC", [&] { return sample_covariance(samples); });
    attempt("PSC", [&] { return proper_sample_covariance(samples, group); });
    attempt(tyler ? "Tyler" : "MGGD",
            [&] { return fixed_point_estimate(samples, obj, cfg).estimate; });
    attempt(tyler ? "ProperTyler" : "ProperMGGD",
            [&] { return constrained_estimate(samples, group, obj, cfg).estimate; });
    return out;
}

FourEstimates estimate_all_four(const SampleSet& samples, const SymmetryGroup& group,
                                const FixedPointConfig& cfg) {
    return estimate_all_four(samples, group, RhoObjective::tyler(samples.dim()), cfg);
}

}  // namespace symcov
