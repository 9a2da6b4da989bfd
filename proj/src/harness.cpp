#include "symcov/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "symcov/rng.hpp"

namespace symcov {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int worker_count() {
    if (const char* env = std::getenv("SYMCOV_THREADS")) {
        const int requested = std::atoi(env);
        if (requested > 0) return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Seed-stream tags keeping truth and sample draws disjoint.
constexpr std::uint64_t kTruthTag = 0x7275746800000000ULL;
constexpr std::uint64_t kSampleTag = 0x73616d7000000000ULL;

}  // namespace

double estimation_error(const Matrix& estimate, const Matrix& truth) {
    if (estimate.rows() != truth.rows() || estimate.cols() != truth.cols()) {
        throw DimMismatch("estimate and truth dimensions differ");
    }
    const Matrix t = trace_normalize(truth);
    return (trace_normalize(estimate) - t).norm() / t.norm();
}

ExperimentReport summarize(std::vector<ExperimentRecord> records,
                           std::map<std::string, std::string> metadata) {
    std::sort(records.begin(), records.end(),
              [](const ExperimentRecord& a, const ExperimentRecord& b) {
                  return std::tie(a.estimator, a.n, a.trial) < std::tie(b.estimator, b.n, b.trial);
              });

    std::map<std::pair<std::string, int>, std::vector<double>> cells;
    for (const ExperimentRecord& r : records) {
        if (r.ok) cells[{r.estimator, r.n}].push_back(r.error);
    }

    ExperimentReport report;
    report.records = std::move(records);
    report.metadata = std::move(metadata);
    for (const auto& [key, errors] : cells) {
        SummaryRow row;
        row.estimator = key.first;
        row.n = key.second;
        row.trials = static_cast<int>(errors.size());
        double mean = 0.0;
        for (double e : errors) mean += e;
        mean /= static_cast<double>(errors.size());
        double var = 0.0;
        for (double e : errors) var += (e - mean) * (e - mean);
        if (errors.size() > 1) var /= static_cast<double>(errors.size() - 1);
        row.mean_error = mean;
        row.std_error = std::sqrt(var / static_cast<double>(errors.size()));
        report.summary.push_back(std::move(row));
    }
    return report;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.quaternion_p < 1 || cfg.trials < 1 || cfg.sample_sizes.empty()) {
        throw InvalidInput("experiment config requires quaternion_p >= 1, trials >= 1 and "
                           "a nonempty sample size list");
    }
    if (!std::is_sorted(cfg.sample_sizes.begin(), cfg.sample_sizes.end())) {
        throw InvalidInput("sample sizes must be ascending");
    }
    if (cfg.metric != "frobenius_normalized") {
        throw InvalidInput("unknown metric: " + cfg.metric);
    }

    const Eigen::Index dim = 4 * static_cast<Eigen::Index>(cfg.quaternion_p);
    const SymmetryGroup group = make_proper_quaternion_group(cfg.quaternion_p);
    const Matrix fixed_truth =
        cfg.per_trial_truth ? Matrix() : random_invariant_spd(dim, group, cfg.seed ^ kTruthTag);

    if (cfg.objective != "tyler" && cfg.objective != "mggd") {
        throw InvalidInput("objective must be tyler or mggd, got " + cfg.objective);
    }
    const RhoObjective obj = cfg.objective == "tyler" ? RhoObjective::tyler(dim)
                                                      : RhoObjective::mggd(cfg.beta);

    FixedPointConfig fp;
    fp.tol = cfg.tol;
    fp.max_iter = cfg.max_iter;

    std::vector<ExperimentRecord> records;
    std::mutex records_mutex;
    std::atomic<int> next_trial{0};

    auto run_trial = [&](int trial) {
        const std::uint64_t trial_seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(trial));
        const Matrix truth = cfg.per_trial_truth
                                 ? random_invariant_spd(dim, group, trial_seed ^ kTruthTag)
                                 : fixed_truth;

        std::vector<ExperimentRecord> local;
        for (int n : cfg.sample_sizes) {
            EllipticalModel model{truth, cfg.tau_dof,
                                  mix_seed(trial_seed ^ kSampleTag, static_cast<std::uint64_t>(n))};
            const SampleSet samples = sample_elliptical(model, n);
            const FourEstimates four = estimate_all_four(samples, group, obj, fp);
            for (const auto& [name, estimate] : four.estimates) {
                local.push_back({name, n, trial, estimation_error(estimate, truth), true, ""});
            }
            for (const auto& [name, reason] : four.failures) {
                local.push_back({name, n, trial, 0.0, false, reason});
            }
        }
        std::lock_guard<std::mutex> lock(records_mutex);
        records.insert(records.end(), local.begin(), local.end());
    };

    const int workers = std::min(worker_count(), cfg.trials);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int t = next_trial.fetch_add(1); t < cfg.trials; t = next_trial.fetch_add(1)) {
                run_trial(t);
            }
        });
    }
    for (std::thread& t : pool) t.join();

    std::map<std::string, std::string> metadata;
    metadata["quaternion_p"] = std::to_string(cfg.quaternion_p);
    {
        std::string sizes;
        for (int n : cfg.sample_sizes) sizes += (sizes.empty() ? "" : " ") + std::to_string(n);
        metadata["sample_sizes"] = sizes;
    }
    metadata["trials"] = std::to_string(cfg.trials);
    metadata["tau_dof"] = std::to_string(cfg.tau_dof);
    metadata["objective"] = cfg.objective;
    if (cfg.objective == "mggd") metadata["beta"] = format_double(cfg.beta);
    metadata["seed"] = std::to_string(cfg.seed);
    metadata["tol"] = format_double(cfg.tol);
    metadata["max_iter"] = std::to_string(cfg.max_iter);
    metadata["truth"] = cfg.per_trial_truth ? "per_trial" : "fixed";
    metadata["metric"] = cfg.metric;
    metadata["version"] = "symcov 0.1.0";

    return summarize(std::move(records), std::move(metadata));
}

void write_report(const ExperimentReport& report, const std::string& path) {
    {
        const std::string records_path = path + ".records.csv";
        std::ofstream out(records_path);
        if (!out) throw IoError("cannot open for writing: " + records_path);
        out << "estimator,n,trial,error\n";
        for (const ExperimentRecord& r : report.records) {
            if (r.ok) {
                out << r.estimator << "," << r.n << "," << r.trial << ","
                    << format_double(r.error) << "\n";
            } else {
                out << r.estimator << "," << r.n << "," << r.trial << ",failed:" << r.reason
                    << "\n";
            }
        }
        if (!out) throw IoError("write failed: " + records_path);
    }
    {
        const std::string summary_path = path + ".summary.csv";
        std::ofstream out(summary_path);
        if (!out) throw IoError("cannot open for writing: " + summary_path);
        out << "estimator,n,mean_error,std_error,trials\n";
        for (const SummaryRow& row : report.summary) {
            out << row.estimator << "," << row.n << "," << format_double(row.mean_error) << ","
                << format_double(row.std_error) << "," << row.trials << "\n";
        }
        if (!out) throw IoError("write failed: " + summary_path);
    }
}

ExperimentConfig read_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);

    ExperimentConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::size_t eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos) {
            throw InvalidInput("config line " + std::to_string(line_no) + " is not key = value");
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "quaternion_p") {
            cfg.quaternion_p = std::stoi(value);
        } else if (key == "sample_sizes") {
            cfg.sample_sizes.clear();
            std::stringstream ss(value);
            std::string cell;
            while (std::getline(ss, cell, ',')) cfg.sample_sizes.push_back(std::stoi(cell));
        } else if (key == "trials") {
            cfg.trials = std::stoi(value);
        } else if (key == "tau_dof") {
            cfg.tau_dof = std::stoi(value);
        } else if (key == "objective") {
            cfg.objective = value;
        } else if (key == "beta") {
            cfg.beta = std::stod(value);
        } else if (key == "seed") {
            cfg.seed = std::stoull(value);
        } else if (key == "tol") {
            cfg.tol = std::stod(value);
        } else if (key == "max_iter") {
            cfg.max_iter = std::stoi(value);
        } else if (key == "truth") {
            if (value != "per_trial" && value != "fixed") {
                throw InvalidInput("truth must be per_trial or fixed");
            }
            cfg.per_trial_truth = value == "per_trial";
        } else if (key == "metric") {
            cfg.metric = value;
        } else {
            throw InvalidInput("unknown config key: " + key);
        }
    }
    return cfg;
}

}  // namespace symcov
