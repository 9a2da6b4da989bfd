#pragma once

#include <cstdint>
#include <string>

#include "symcov/samples.hpp"
#include "symcov/symmetry.hpp"

namespace symcov {

/// Elliptical (scaled Gaussian) data model: s = sqrt(tau) * v with
/// tau ~ chi^2(tau_dof) and v ~ N(0, scatter). tau_dof = 0 pins tau to 1,
/// giving plain Gaussian draws.
struct EllipticalModel {
    Matrix scatter;
    int tau_dof = 1;
    std::uint64_t seed = 0;
};

/// A A^T + p * 1e-6 * I with A a p x p standard normal draw.
Matrix random_spd(Eigen::Index p, std::uint64_t seed);

/// Group average of random_spd: a random element of F(K).
Matrix random_invariant_spd(Eigen::Index p, const SymmetryGroup& group, std::uint64_t seed);

/// n independent elliptical draws. Each sample has its own counter-derived
/// stream, so sample i is the same regardless of n.
SampleSet sample_elliptical(const EllipticalModel& model, Eigen::Index n);

/// CSV with a `# dim=<p> n=<n> seed=<seed>` header line, one sample per row.
void write_samples_csv(const SampleSet& samples, const std::string& path,
                       std::uint64_t seed = 0);
SampleSet read_samples_csv(const std::string& path);

}  // namespace symcov
