#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symcov {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Geodesics between random invariant pairs stay invariant, for each of the
/// four group families (dimension 8), at several interior parameters.
SuiteResult verify_geodesic_invariance(std::uint64_t seed, int pairs = 100);

/// The four builders pass the group axioms, and random quaternion-invariant
/// matrices commute with randomly sampled continuous rotations.
SuiteResult verify_group_structure(std::uint64_t seed);

/// Chord inequality along geodesics for the Tyler and MGGD objectives over
/// random SPD pairs and fixed elliptical samples.
SuiteResult verify_convexity(std::uint64_t seed, int pairs = 100);

std::vector<SuiteResult> run_verification(const std::string& suite, std::uint64_t seed);

}  // namespace symcov
