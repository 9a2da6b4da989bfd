// Acceptance suite: end-to-end numerical certification of the library.
// Prints one PASS/FAIL line per criterion; exits nonzero if any fail.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "symcov/estimators.hpp"
#include "symcov/harness.hpp"
#include "symcov/objectives.hpp"
#include "symcov/rng.hpp"
#include "symcov/sampling.hpp"

using namespace symcov;

namespace {

constexpr std::uint64_t kSeed = 20260823;
int failures = 0;

void report(int number, const std::string& name, bool passed, const std::string& detail = "") {
    std::printf("criterion %d [%s]: %s%s%s\n", number, name.c_str(),
                passed ? "PASS" : "FAIL", detail.empty() ? "" : " - ", detail.c_str());
    if (!passed) ++failures;
}

// 1. Geodesics between invariant endpoints stay invariant for all four
//    group families at dimension 8.
void criterion_geodesic_invariance() {
    const std::vector<SymmetryGroup> families = {
        make_circulant_group(8), make_persymmetric_group(8), make_proper_complex_group(4),
        make_proper_quaternion_group(2)};
    std::uint64_t counter = 0;
    for (const SymmetryGroup& group : families) {
        for (int k = 0; k < 100; ++k) {
            const Matrix q0 = random_invariant_spd(8, group, mix_seed(kSeed, counter++));
            const Matrix q1 = random_invariant_spd(8, group, mix_seed(kSeed, counter++));
            for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
                if (!is_invariant(geodesic(q0, q1, t), group, 1e-9)) {
                    report(1, "geodesic invariance", false,
                           "group " + group.label + ", t=" + std::to_string(t));
                    return;
                }
            }
        }
    }
    report(1, "geodesic invariance", true, "4 families x 100 pairs x 5 points");
}

// 2. Chord inequality along geodesics for the Tyler and MGGD objectives.
void criterion_convexity() {
    const std::vector<double> grid = {0.1, 0.25, 0.5, 0.75, 0.9};
    std::uint64_t counter = 1000;
    for (Eigen::Index p : {Eigen::Index(2), Eigen::Index(5), Eigen::Index(10)}) {
        const Matrix scatter = random_spd(p, mix_seed(kSeed, counter++));
        const SampleSet samples =
            sample_elliptical({scatter, 1, mix_seed(kSeed, counter++)}, 200);
        for (int k = 0; k < 100; ++k) {
            const Matrix q0 = random_spd(p, mix_seed(kSeed, counter++));
            const Matrix q1 = random_spd(p, mix_seed(kSeed, counter++));
            const std::function<double(const Matrix&)> tyler = [&](const Matrix& q) {
                return tyler_nll(samples, q);
            };
            if (!midpoint_convexity_check(tyler, q0, q1, grid, 1e-9)) {
                report(2, "g-convexity", false, "tyler, p=" + std::to_string(p));
                return;
            }
            for (double beta : {0.2, 0.5, 1.0}) {
                const std::function<double(const Matrix&)> mggd = [&](const Matrix& q) {
                    return mggd_nll(samples, q, beta);
                };
                if (!midpoint_convexity_check(mggd, q0, q1, grid, 1e-9)) {
                    report(2, "g-convexity", false,
                           "mggd beta=" + std::to_string(beta) + ", p=" + std::to_string(p));
                    return;
                }
            }
        }
    }
    report(2, "g-convexity", true, "tyler + mggd(0.2,0.5,1.0), p in {2,5,10}, 100 pairs each");
}

// 3. Finite quaternion generators imply invariance under the continuous
//    rotation family.
void criterion_generator_equivalence() {
    std::uint64_t counter = 2000;
    for (Eigen::Index p : {Eigen::Index(2), Eigen::Index(10)}) {
        const SymmetryGroup group = make_proper_quaternion_group(p);
        for (int k = 0; k < 10; ++k) {
            const std::uint64_t s = mix_seed(kSeed, counter++);
            const Matrix q = random_invariant_spd(4 * p, group, s);
            if (!generator_equivalence_check(q, 50, mix_seed(s, 1))) {
                report(3, "generator equivalence", false, "dim " + std::to_string(4 * p));
                return;
            }
        }
    }
    report(3, "generator equivalence", true, "20 matrices (dim 8 and 40) x 50 rotations");
}

// 4. The reweighted iteration descends and converges.
void criterion_descent() {
    std::uint64_t counter = 3000;
    for (int dataset = 0; dataset < 50; ++dataset) {
        const Matrix scatter = random_spd(10, mix_seed(kSeed, counter++));
        const SampleSet samples =
            sample_elliptical({scatter, 1, mix_seed(kSeed, counter++)}, 100);
        for (const RhoObjective& obj : {RhoObjective::tyler(10), RhoObjective::mggd(0.5)}) {
            const EstimateResult result = fixed_point_estimate(samples, obj);
            if (!result.converged || result.iterations > 200) {
                report(4, "descent and convergence", false,
                       "dataset " + std::to_string(dataset) + " did not converge in 200");
                return;
            }
            for (std::size_t k = 1; k < result.nll_trace.size(); ++k) {
                if (result.nll_trace[k] > result.nll_trace[k - 1] + 1e-10) {
                    report(4, "descent and convergence", false,
                           "objective increased at step " + std::to_string(k));
                    return;
                }
            }
        }
    }
    report(4, "descent and convergence", true,
           "50 datasets x {tyler, mggd(0.5)}, <=200 iterations, monotone objective");
}

// 5. Constrained estimates stay invariant; the replication identity holds.
void criterion_constraint_preservation() {
    const SymmetryGroup quat = make_proper_quaternion_group(2);
    std::uint64_t counter = 4000;
    for (int k = 0; k < 10; ++k) {
        const Matrix truth = random_invariant_spd(8, quat, mix_seed(kSeed, counter++));
        const SampleSet samples =
            sample_elliptical({truth, 1, mix_seed(kSeed, counter++)}, 60);

        const EstimateResult constrained =
            constrained_estimate(samples, quat, RhoObjective::tyler(8));
        if (!is_invariant(constrained.estimate, quat, 1e-8)) {
            report(5, "constraint preservation", false, "constrained estimate left F(K)");
            return;
        }

        const Matrix psc = proper_sample_covariance(samples, quat);
        const Matrix via_replication = sample_covariance(symmetrize_samples(samples, quat));
        const Matrix via_projection = project_to_invariant(sample_covariance(samples), quat);
        if ((psc - via_replication).norm() > 1e-12 * psc.norm() ||
            (psc - via_projection).norm() > 1e-12 * psc.norm()) {
            report(5, "constraint preservation", false, "replication identity violated");
            return;
        }
    }
    report(5, "constraint preservation", true,
           "invariance at 1e-8 and replication identity at 1e-12, 10 datasets");
}

// 6. Restarts from random inits reach the same global minimum.
void criterion_restart_consistency() {
    // Persymmetric on dim 4: F(K) is a nontrivial proper subspace.
    const SymmetryGroup group = make_persymmetric_group(4);
    const Matrix truth = random_invariant_spd(4, group, mix_seed(kSeed, 5000));
    const SampleSet samples = sample_elliptical({truth, 1, mix_seed(kSeed, 5001)}, 40);

    FixedPointConfig cfg;
    cfg.tol = 1e-12;
    cfg.max_iter = 5000;

    Matrix first, first_constrained;
    for (int k = 0; k < 10; ++k) {
        cfg.init = random_spd(4, mix_seed(kSeed, 5100 + static_cast<std::uint64_t>(k)));
        const Matrix limit = trace_normalize(
            fixed_point_estimate(samples, RhoObjective::tyler(4), cfg).estimate);
        cfg.init = project_to_invariant(*cfg.init, group);
        const Matrix limit_constrained = trace_normalize(
            constrained_estimate(samples, group, RhoObjective::tyler(4), cfg).estimate);
        if (k == 0) {
            first = limit;
            first_constrained = limit_constrained;
        } else if ((limit - first).norm() > 1e-6 ||
                   (limit_constrained - first_constrained).norm() > 1e-6) {
            report(6, "restart consistency", false,
                   "limits differ by more than 1e-6 at restart " + std::to_string(k));
            return;
        }
    }
    report(6, "restart consistency", true, "10 restarts, tyler and constrained tyler");
}

// 7. The Monte Carlo benchmark shows the qualitative estimator ordering.
void criterion_experiment() {
    ExperimentConfig cfg;
    cfg.quaternion_p = 10;
    cfg.sample_sizes = {150, 300, 450, 600};
    cfg.trials = 100;
    cfg.tau_dof = 1;
    cfg.seed = kSeed;

    const ExperimentReport rep = run_experiment(cfg);
    auto row = [&](const std::string& estimator, int n) -> const SummaryRow& {
        for (const SummaryRow& r : rep.summary) {
            if (r.estimator == estimator && r.n == n) return r;
        }
        throw std::runtime_error("missing summary row " + estimator);
    };
    auto separated = [&](const SummaryRow& lo, const SummaryRow& hi) {
        return hi.mean_error - lo.mean_error >= 2.0 * std::hypot(lo.std_error, hi.std_error);
    };

    bool ok = true;
    std::string detail;
    for (int n : cfg.sample_sizes) {
        if (!separated(row("ProperTyler", n), row("Tyler", n))) {
            ok = false;
            detail = "ProperTyler not better than Tyler at n=" + std::to_string(n);
        }
        if (!separated(row("PSC", n), row("SC", n))) {
            ok = false;
            detail = "PSC not better than SC at n=" + std::to_string(n);
        }
    }
    for (const std::string& est : {"SC", "PSC", "Tyler", "ProperTyler"}) {
        if (!separated(row(est, 600), row(est, 150))) {
            ok = false;
            detail = est + " error does not decrease from n=150 to n=600";
        }
    }
    for (const SummaryRow& r : rep.summary) {
        std::printf("    %-12s n=%-4d mean_error=%.5f se=%.5f\n", r.estimator.c_str(), r.n,
                    r.mean_error, r.std_error);
    }
    report(7, "benchmark ordering", ok, ok ? "100 trials, dim 40, all margins >= 2 se" : detail);
}

// 8. Scale invariances of the Tyler objective and estimate.
void criterion_scale_invariance() {
    const SampleSet samples = sample_elliptical({random_spd(6, mix_seed(kSeed, 6000)), 1,
                                                 mix_seed(kSeed, 6001)}, 80);
    const Matrix q = random_spd(6, mix_seed(kSeed, 6002));
    const double base = tyler_nll(samples, q);
    for (double c : {0.1, 10.0}) {
        if (std::abs(tyler_nll(samples, c * q) - base) > 1e-10) {
            report(8, "tyler scale invariance", false, "objective changed under Q -> cQ");
            return;
        }
    }

    Eigen::MatrixXd rescaled = samples.data();
    rescaled.col(5) *= 0.001;
    rescaled.col(17) *= 500.0;
    const Matrix a = fixed_point_estimate(samples, RhoObjective::tyler(6)).estimate;
    const Matrix b = fixed_point_estimate(SampleSet(rescaled), RhoObjective::tyler(6)).estimate;
    if ((a - b).norm() > 1e-10) {
        report(8, "tyler scale invariance", false, "estimate changed under sample rescaling");
        return;
    }
    report(8, "tyler scale invariance", true, "objective and estimate both invariant at 1e-10");
}

}  // namespace

int main() {
    criterion_geodesic_invariance();
    criterion_convexity();
    criterion_generator_equivalence();
    criterion_descent();
    criterion_constraint_preservation();
    criterion_restart_consistency();
    criterion_experiment();
    criterion_scale_invariance();

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
