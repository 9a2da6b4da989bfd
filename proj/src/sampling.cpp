#include "symcov/sampling.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "symcov/rng.hpp"

namespace symcov {

Matrix random_spd(Eigen::Index p, std::uint64_t seed) {
    if (p < 1) throw InvalidInput("dimension must be positive");
    Rng rng(mix_seed(seed, 0x5bd1e995ULL));
    Matrix a(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) a(i, j) = rng.normal();
    }
    return resymmetrize(a * a.transpose()) +
           static_cast<double>(p) * 1e-6 * Matrix::Identity(p, p);
}

Matrix random_invariant_spd(Eigen::Index p, const SymmetryGroup& group, std::uint64_t seed) {
    return project_to_invariant(random_spd(p, seed), group);
}

SampleSet sample_elliptical(const EllipticalModel& model, Eigen::Index n) {
    if (n < 1) throw InvalidInput("sample count must be positive");
    if (model.tau_dof < 0) throw InvalidInput("tau_dof must be nonnegative");
    const Eigen::Index p = model.scatter.rows();
    const Matrix root = spd_power(model.scatter, 0.5);

    Matrix data(p, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Rng rng(mix_seed(model.seed, static_cast<std::uint64_t>(i)));
        Vector z(p);
        for (Eigen::Index j = 0; j < p; ++j) z[j] = rng.normal();
        // z is drawn before tau so the Gaussian part is unchanged when the
        // texture is switched off.
        const double tau = model.tau_dof == 0 ? 1.0 : rng.chi_squared(model.tau_dof);
        data.col(i) = std::sqrt(tau) * (root * z);
    }
    return SampleSet(std::move(data));
}

void write_samples_csv(const SampleSet& samples, const std::string& path, std::uint64_t seed) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << "# dim=" << samples.dim() << " n=" << samples.count() << " seed=" << seed << "\n";
    char buf[32];
    for (Eigen::Index i = 0; i < samples.count(); ++i) {
        for (Eigen::Index j = 0; j < samples.dim(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", samples.data()(j, i));
            out << buf << (j + 1 < samples.dim() ? "," : "\n");
        }
    }
    if (!out) throw IoError("write failed: " + path);
}

SampleSet read_samples_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::string line;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidInput("sample file contains no data rows: " + path);
    const Eigen::Index p = static_cast<Eigen::Index>(rows[0].size());
    Matrix data(p, static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != p) {
            throw InvalidInput("ragged sample file: " + path);
        }
        for (Eigen::Index j = 0; j < p; ++j) data(j, static_cast<Eigen::Index>(i)) = rows[i][j];
    }
    return SampleSet(std::move(data));
}

}  // namespace symcov
