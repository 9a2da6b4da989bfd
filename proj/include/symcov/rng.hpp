#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace symcov {

/// splitmix64 step; also used to mix seeds with counters so that
/// per-sample and per-trial streams are disjoint and order-independent.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t s = seed ^ (counter * 0x9e3779b97f4a7c15ULL);
    return splitmix64(s);
}

/// Small counter-based generator: splitmix64 uniforms with Box-Muller
/// normals. Bit-reproducible across platforms, unlike the standard
/// library distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Uniform double in (0,1).
    double uniform() {
        const std::uint64_t bits = splitmix64(state_) >> 11;  // 53 bits
        return (static_cast<double>(bits) + 0.5) * 0x1p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

    /// Chi-squared draw with integer degrees of freedom.
    double chi_squared(int dof) {
        double sum = 0.0;
        for (int k = 0; k < dof; ++k) {
            const double z = normal();
            sum += z * z;
        }
        return sum;
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace symcov
