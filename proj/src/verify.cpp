#include "symcov/verify.hpp"

#include <functional>

#include "symcov/objectives.hpp"
#include "symcov/rng.hpp"
#include "symcov/sampling.hpp"
#include "symcov/symmetry.hpp"

namespace symcov {

namespace {

std::vector<SymmetryGroup> dim8_families() {
    return {make_circulant_group(8), make_persymmetric_group(8), make_proper_complex_group(4),
            make_proper_quaternion_group(2)};
}

}  // namespace

SuiteResult verify_geodesic_invariance(std::uint64_t seed, int pairs) {
    const std::vector<double> grid = {0.1, 0.25, 0.5, 0.75, 0.9};
    std::uint64_t counter = 0;
    for (const SymmetryGroup& group : dim8_families()) {
        for (int k = 0; k < pairs; ++k) {
            const Matrix q0 = random_invariant_spd(group.dim, group, mix_seed(seed, counter++));
            const Matrix q1 = random_invariant_spd(group.dim, group, mix_seed(seed, counter++));
            for (double t : grid) {
                if (!is_invariant(geodesic(q0, q1, t), group, 1e-9)) {
                    return {"geodesic", false,
                            "geodesic left F(K) for group " + group.label + " at t=" +
                                std::to_string(t)};
                }
            }
        }
    }
    return {"geodesic", true, "geodesics stay invariant for all four families"};
}

SuiteResult verify_group_structure(std::uint64_t seed) {
    for (const SymmetryGroup& group : dim8_families()) {
        const GroupCheckReport report = verify_group_report(group, 1e-10);
        if (!report.ok) {
            return {"group", false, group.label + ": " + report.message};
        }
    }
    // Finite generators capture the continuous rotation family.
    for (Eigen::Index p : {Eigen::Index(2), Eigen::Index(10)}) {
        const SymmetryGroup group = make_proper_quaternion_group(p);
        for (int k = 0; k < 10; ++k) {
            const std::uint64_t s = mix_seed(seed, 1000 * static_cast<std::uint64_t>(p) +
                                                       static_cast<std::uint64_t>(k));
            const Matrix q = random_invariant_spd(4 * p, group, s);
            if (!generator_equivalence_check(q, 50, mix_seed(s, 1))) {
                return {"group", false,
                        "generator equivalence failed at dim " + std::to_string(4 * p)};
            }
        }
    }
    return {"group", true, "all builders pass the group axioms; generators match rotations"};
}

SuiteResult verify_convexity(std::uint64_t seed, int pairs) {
    const std::vector<double> grid = {0.1, 0.25, 0.5, 0.75, 0.9};
    const std::vector<double> betas = {0.2, 0.5, 1.0};
    std::uint64_t counter = 0;
    for (Eigen::Index p : {Eigen::Index(2), Eigen::Index(5), Eigen::Index(10)}) {
        const Matrix scatter = random_spd(p, mix_seed(seed, counter++));
        const SampleSet samples = sample_elliptical({scatter, 1, mix_seed(seed, counter++)}, 200);
        for (int k = 0; k < pairs; ++k) {
            const Matrix q0 = random_spd(p, mix_seed(seed, counter++));
            const Matrix q1 = random_spd(p, mix_seed(seed, counter++));
            const std::function<double(const Matrix&)> tyler = [&](const Matrix& q) {
                return tyler_nll(samples, q);
            };
            if (!midpoint_convexity_check(tyler, q0, q1, grid, 1e-9)) {
                return {"convexity", false, "tyler chord inequality failed at p=" +
                                                std::to_string(p)};
            }
            for (double beta : betas) {
                const std::function<double(const Matrix&)> mggd = [&](const Matrix& q) {
                    return mggd_nll(samples, q, beta);
                };
                if (!midpoint_convexity_check(mggd, q0, q1, grid, 1e-9)) {
                    return {"convexity", false,
                            "mggd chord inequality failed at p=" + std::to_string(p) +
                                " beta=" + std::to_string(beta)};
                }
            }
        }
    }
    return {"convexity", true, "chord inequality holds for tyler and mggd objectives"};
}

std::vector<SuiteResult> run_verification(const std::string& suite, std::uint64_t seed) {
    std::vector<SuiteResult> results;
    if (suite == "geodesic" || suite == "all") results.push_back(verify_geodesic_invariance(seed));
    if (suite == "group" || suite == "all") results.push_back(verify_group_structure(seed));
    if (suite == "convexity" || suite == "all") results.push_back(verify_convexity(seed));
    if (results.empty()) {
        throw InvalidInput("unknown suite: " + suite +
                           " (expected geodesic, group, convexity or all)");
    }
    return results;
}

}  // namespace symcov
