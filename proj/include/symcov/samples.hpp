#pragma once

#include <Eigen/Dense>

#include "symcov/errors.hpp"

namespace symcov {

/// A set of n real p-vectors, stored as columns of a p x n matrix.
/// Zero vectors are rejected at construction: the log in the Tyler
/// objective is undefined there.
class SampleSet {
  public:
    explicit SampleSet(Eigen::MatrixXd data) : data_(std::move(data)) {
        if (data_.cols() < 1) {
            throw InvalidSample("sample set must contain at least one vector");
        }
        for (Eigen::Index i = 0; i < data_.cols(); ++i) {
            if (data_.col(i).norm() == 0.0) {
                throw InvalidSample("sample " + std::to_string(i) + " is the zero vector");
            }
        }
    }

    Eigen::Index dim() const { return data_.rows(); }
    Eigen::Index count() const { return data_.cols(); }
    const Eigen::MatrixXd& data() const { return data_; }
    Eigen::VectorXd vector(Eigen::Index i) const { return data_.col(i); }

  private:
    Eigen::MatrixXd data_;
};

}  // namespace symcov
