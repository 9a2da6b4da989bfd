#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symcov/samples.hpp"
#include "symcov/spd.hpp"

namespace symcov {

/// A finite multiplicative group of real orthogonal matrices, acting on
/// covariances by conjugation Q -> L Q L^T.
struct SymmetryGroup {
    Eigen::Index dim = 0;
    std::vector<Matrix> elements;  // contains the identity; closed under products
    std::string label = "custom";
};

/// Parameters of the isoclinic quaternion rotation family: angle theta and
/// a unit axis (alpha, beta_r, gamma).
struct QuaternionRotationParams {
    double theta = 0.0;
    double alpha = 1.0;
    double beta_r = 0.0;
    double gamma = 0.0;
};

/// The trivial group {I_p}.
SymmetryGroup make_trivial_group(Eigen::Index p);

/// Cyclic group of order n generated by the row-shift permutation.
/// F(K) is exactly the set of circulant matrices.
SymmetryGroup make_circulant_group(Eigen::Index n);

/// {I_n, J_n} with J_n the exchange matrix. F(K) is the set of
/// symmetric persymmetric (bisymmetric) matrices.
SymmetryGroup make_persymmetric_group(Eigen::Index n);

/// Multiplicative closure {+-I, +-L1} of the 90-degree rotation
/// L1 = [[0,1],[-1,0]] (x) I_p, dimension 2p. F(K) is the set of
/// proper complex covariances in their real representation.
SymmetryGroup make_proper_complex_group(Eigen::Index p);

/// The order-8 quaternion group {+-I, +-R1 (x) I_p, +-R2 (x) I_p,
/// +-R3 (x) I_p}, dimension 4p. F(K) is the set of proper quaternion
/// covariances in their real representation.
SymmetryGroup make_proper_quaternion_group(Eigen::Index p);

struct GroupCheckReport {
    bool ok = true;
    std::string message;  // first violation, empty when ok
};

/// Orthogonality of every element, presence of the identity, and closure
/// under multiplication (nearest-element match within tol * sqrt(p)).
GroupCheckReport verify_group_report(const SymmetryGroup& group, double tol = 1e-10);
bool verify_group(const SymmetryGroup& group, double tol = 1e-10);

/// True iff max over L of ||QL - LQ||_F / ||Q||_F <= tol.
/// Commutation with every element is equivalent to membership in F(K).
bool is_invariant(const Matrix& q, const SymmetryGroup& group, double tol = 1e-9);

/// Largest relative commutation residual over the group.
double invariance_residual(const Matrix& q, const SymmetryGroup& group);

/// Group average (1/|K|) sum_L L Q L^T: the orthogonal projection onto
/// F(K). Idempotent; preserves positive definiteness.
Matrix project_to_invariant(const Matrix& q, const SymmetryGroup& group);

/// The 4p x 4p isoclinic rotation of the proper quaternion family.
/// Throws InvalidInput when the axis is not unit length.
Matrix quaternion_rotation(const QuaternionRotationParams& params, Eigen::Index p);

/// Checks that invariance under the 8 finite generators implies invariance
/// under randomly sampled rotations of the continuous family. Q must have
/// dimension 4p and commute with the quaternion group already.
bool generator_equivalence_check(const Matrix& q, int trials, std::uint64_t seed);

/// The |K| * n vectors {L s_i}, outer loop over group elements, inner
/// loop over samples.
SampleSet symmetrize_samples(const SampleSet& samples, const SymmetryGroup& group);

/// Reads a custom group from a text file: first line `dim=<p>`, then one
/// matrix per blank-line-separated block, rows comma-separated.
SymmetryGroup read_group_file(const std::string& path);

}  // namespace symcov
