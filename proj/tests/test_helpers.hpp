#pragma once

#include <random>

#include <Eigen/Dense>

// Test-only generators, independent of the library's sampling module.
namespace testutil {

inline Eigen::MatrixXd random_symmetric(Eigen::Index p, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::MatrixXd m(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            m(i, j) = dist(gen);
            m(j, i) = m(i, j);
        }
    }
    return m;
}

inline Eigen::MatrixXd random_spd(Eigen::Index p, unsigned seed) {
    std::mt19937 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::MatrixXd a(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) a(i, j) = dist(gen);
    }
    return a * a.transpose() + 0.1 * Eigen::MatrixXd::Identity(p, p);
}

inline Eigen::MatrixXd random_samples(Eigen::Index p, Eigen::Index n, unsigned seed) {
    std::mt19937 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::MatrixXd data(p, n);
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) data(i, j) = dist(gen);
    }
    return data;
}

}  // namespace testutil
