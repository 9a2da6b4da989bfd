// Command line front end: Monte Carlo simulation, single estimation runs,
// and the numerical verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "symcov/harness.hpp"
#include "symcov/verify.hpp"

namespace {

using namespace symcov;

SymmetryGroup group_from_spec(const std::string& spec, Eigen::Index dim) {
    if (spec == "none") return make_trivial_group(dim);
    if (spec == "circulant") return make_circulant_group(dim);
    if (spec == "persymmetric") return make_persymmetric_group(dim);
    if (spec == "proper-complex") {
        if (dim % 2 != 0) throw InvalidInput("proper-complex requires even dimension");
        return make_proper_complex_group(dim / 2);
    }
    if (spec == "proper-quaternion") {
        if (dim % 4 != 0) {
            throw InvalidInput("proper-quaternion requires dimension divisible by 4");
        }
        return make_proper_quaternion_group(dim / 4);
    }
    if (spec.rfind("file:", 0) == 0) {
        SymmetryGroup group = read_group_file(spec.substr(5));
        if (group.dim != dim) {
            throw DimMismatch("group file dimension does not match sample dimension");
        }
        const GroupCheckReport report = verify_group_report(group);
        if (!report.ok) throw InvalidInput("custom group is invalid: " + report.message);
        return group;
    }
    throw CLI::ValidationError("--group", "unknown group: " + spec);
}

void write_matrix_csv(const Matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    char buf[40];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            out << buf << (j + 1 < m.cols() ? "," : "\n");
        }
    }
    if (!out) throw IoError("write failed: " + path);
}

int run_simulate(const std::string& config_path, const std::string& out_path) {
    const ExperimentConfig cfg = read_experiment_config(config_path);
    const ExperimentReport report = run_experiment(cfg);
    write_report(report, out_path);
    std::cout << "wrote " << out_path << ".records.csv and " << out_path << ".summary.csv\n";
    for (const SummaryRow& row : report.summary) {
        std::printf("%-12s n=%-5d mean_error=%.6f (se %.6f, %d trials)\n", row.estimator.c_str(),
                    row.n, row.mean_error, row.std_error, row.trials);
    }
    return 0;
}

int run_estimate(const std::string& samples_path, const std::string& group_spec,
                 const std::string& objective, double beta, double tol, int max_iter,
                 const std::string& out_path) {
    const SampleSet samples = read_samples_csv(samples_path);
    const SymmetryGroup group = group_from_spec(group_spec, samples.dim());
    const RhoObjective obj = objective == "tyler" ? RhoObjective::tyler(samples.dim())
                                                  : RhoObjective::mggd(beta);
    FixedPointConfig cfg;
    cfg.tol = tol;
    cfg.max_iter = max_iter;

    const EstimateResult result = constrained_estimate(samples, group, obj, cfg);
    write_matrix_csv(result.estimate, out_path);
    std::cout << "estimate written to " << out_path << " (" << result.iterations
              << " iterations, " << (result.converged ? "converged" : "NOT converged")
              << ", final relative change " << result.final_relative_change << ")\n";
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
    bool all_passed = true;
    for (const SuiteResult& result : run_verification(suite, seed)) {
        std::printf("%-10s %s  %s\n", result.name.c_str(), result.passed ? "PASS" : "FAIL",
                    result.detail.c_str());
        all_passed = all_passed && result.passed;
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Group-symmetric robust covariance estimation"};
    app.require_subcommand(1);

    auto* simulate = app.add_subcommand("simulate", "Run the Monte Carlo benchmark");
    std::string config_path, sim_out;
    simulate->add_option("--config", config_path, "flat key = value config file")
        ->required()
        ->check(CLI::ExistingFile);
    simulate->add_option("--out", sim_out, "output path prefix for the CSV reports")->required();

    auto* estimate = app.add_subcommand("estimate", "Estimate one covariance from a sample CSV");
    std::string samples_path, group_spec = "none", objective = "tyler", est_out;
    double beta = 0.5, tol = 1e-8;
    int max_iter = 500;
    estimate->add_option("--samples", samples_path, "input sample CSV")
        ->required()
        ->check(CLI::ExistingFile);
    estimate->add_option("--group", group_spec,
                         "circulant|persymmetric|proper-complex|proper-quaternion|none|file:PATH");
    estimate->add_option("--objective", objective, "tyler|mggd")
        ->check(CLI::IsMember({"tyler", "mggd"}));
    estimate->add_option("--beta", beta, "MGGD shape parameter");
    estimate->add_option("--tol", tol, "relative change stopping threshold");
    estimate->add_option("--max-iter", max_iter, "iteration cap");
    estimate->add_option("--out", est_out, "output matrix CSV")->required();

    auto* verify = app.add_subcommand("verify", "Run the numerical verification suites");
    std::string suite = "all";
    std::uint64_t seed = 20260823;
    verify->add_option("--suite", suite, "geodesic|group|convexity|all")
        ->check(CLI::IsMember({"geodesic", "group", "convexity", "all"}));
    verify->add_option("--seed", seed, "RNG seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed()) return run_simulate(config_path, sim_out);
        if (estimate->parsed()) {
            return run_estimate(samples_path, group_spec, objective, beta, tol, max_iter,
                                est_out);
        }
        return run_verify(suite, seed);
    } catch (const symcov::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
