#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symcov/estimators.hpp"
#include "symcov/sampling.hpp"

namespace symcov {

/// Monte Carlo benchmark configuration. The data model is the proper
/// quaternion scenario: real dimension 4 * quaternion_p, ground truth in
/// F(K) for the quaternion group, elliptical draws.
struct ExperimentConfig {
    int quaternion_p = 10;
    std::vector<int> sample_sizes = {150, 300, 450, 600};
    int trials = 100;
    int tau_dof = 1;
    std::string objective = "tyler";  // tyler | mggd
    double beta = 0.5;                // mggd only
    std::uint64_t seed = 0;
    double tol = 1e-8;
    int max_iter = 500;
    bool per_trial_truth = true;  // redraw the ground truth each trial
    std::string metric = "frobenius_normalized";
};

struct ExperimentRecord {
    std::string estimator;
    int n = 0;
    int trial = 0;
    double error = 0.0;
    bool ok = true;
    std::string reason;  // failure reason when !ok
};

struct SummaryRow {
    std::string estimator;
    int n = 0;
    double mean_error = 0.0;
    double std_error = 0.0;
    int trials = 0;
};

struct ExperimentReport {
    std::vector<ExperimentRecord> records;  // sorted by (estimator, n, trial)
    std::vector<SummaryRow> summary;
    std::map<std::string, std::string> metadata;
};

/// Relative Frobenius distance between trace-normalized matrices;
/// scale-invariant in both arguments.
double estimation_error(const Matrix& estimate, const Matrix& truth);

/// Runs the full grid (estimator x sample size x trial). Trials execute
/// concurrently (SYMCOV_THREADS caps the worker count) with disjoint
/// derived seeds; output is independent of the schedule.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Writes <path>.records.csv and <path>.summary.csv with 17-significant-
/// digit floats.
void write_report(const ExperimentReport& report, const std::string& path);

/// Flat `key = value` config file, '#' comments. Unknown keys are errors.
ExperimentConfig read_experiment_config(const std::string& path);

ExperimentReport summarize(std::vector<ExperimentRecord> records,
                           std::map<std::string, std::string> metadata);

}  // namespace symcov
