#include "symcov/symmetry.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "symcov/rng.hpp"

namespace symcov {

namespace {

Matrix kron_identity(const Matrix& block, Eigen::Index p) {
    const Eigen::Index b = block.rows();
    Matrix out = Matrix::Zero(b * p, b * p);
    for (Eigen::Index i = 0; i < b; ++i) {
        for (Eigen::Index j = 0; j < b; ++j) {
            if (block(i, j) != 0.0) {
                out.block(i * p, j * p, p, p) =
                    block(i, j) * Matrix::Identity(p, p);
            }
        }
    }
    return out;
}

Matrix quaternion_unit(int which) {
    Matrix r(4, 4);
    switch (which) {
        case 1:
            r << 0, 1, 0, 0,
                -1, 0, 0, 0,
                 0, 0, 0, -1,
                 0, 0, 1, 0;
            break;
        case 2:
            r << 0, 0, 1, 0,
                 0, 0, 0, 1,
                -1, 0, 0, 0,
                 0, -1, 0, 0;
            break;
        default:
            r << 0, 0, 0, 1,
                 0, 0, -1, 0,
                 0, 1, 0, 0,
                -1, 0, 0, 0;
            break;
    }
    return r;
}

void require_dims(const Matrix& q, const SymmetryGroup& group) {
    if (q.rows() != group.dim || q.cols() != group.dim) {
        throw DimMismatch("matrix dimension " + std::to_string(q.rows()) +
                          " does not match group dimension " + std::to_string(group.dim));
    }
}

}  // namespace

SymmetryGroup make_trivial_group(Eigen::Index p) {
    return {p, {Matrix::Identity(p, p)}, "trivial"};
}

SymmetryGroup make_circulant_group(Eigen::Index n) {
    Matrix shift = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) shift((j + 1) % n, j) = 1.0;

    SymmetryGroup group{n, {}, "circulant"};
    Matrix power = Matrix::Identity(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        group.elements.push_back(power);
        power = shift * power;
    }
    return group;
}

SymmetryGroup make_persymmetric_group(Eigen::Index n) {
    Matrix exchange = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) exchange(i, n - 1 - i) = 1.0;
    return {n, {Matrix::Identity(n, n), exchange}, "persymmetric"};
}

SymmetryGroup make_proper_complex_group(Eigen::Index p) {
    Matrix j2(2, 2);
    j2 << 0, 1,
         -1, 0;
    const Matrix l1 = kron_identity(j2, p);
    const Matrix id = Matrix::Identity(2 * p, 2 * p);
    // {I, L1} is not closed (L1^2 = -I); return the generated group.
    return {2 * p, {id, l1, -id, -l1}, "proper_complex"};
}

SymmetryGroup make_proper_quaternion_group(Eigen::Index p) {
    const Matrix id = Matrix::Identity(4 * p, 4 * p);
    const Matrix l1 = kron_identity(quaternion_unit(1), p);
    const Matrix l2 = kron_identity(quaternion_unit(2), p);
    const Matrix l3 = kron_identity(quaternion_unit(3), p);
    return {4 * p, {id, l1, l2, l3, -id, -l1, -l2, -l3}, "proper_quaternion"};
}

GroupCheckReport verify_group_report(const SymmetryGroup& group, double tol) {
    const Eigen::Index p = group.dim;
    const double match_tol = tol * std::sqrt(static_cast<double>(p));
    const Matrix id = Matrix::Identity(p, p);

    auto nearest_distance = [&](const Matrix& m) {
        double best = std::numeric_limits<double>::infinity();
        for (const Matrix& e : group.elements) best = std::min(best, (m - e).norm());
        return best;
    };

    for (std::size_t a = 0; a < group.elements.size(); ++a) {
        const Matrix& l = group.elements[a];
        if (l.rows() != p || l.cols() != p) {
            return {false, "element " + std::to_string(a) + " has wrong dimension"};
        }
        if ((l.transpose() * l - id).cwiseAbs().maxCoeff() > tol) {
            return {false, "element " + std::to_string(a) + " is not orthogonal"};
        }
    }
    if (nearest_distance(id) > match_tol) {
        return {false, "identity is missing from the element list"};
    }
    for (std::size_t a = 0; a < group.elements.size(); ++a) {
        for (std::size_t b = 0; b < group.elements.size(); ++b) {
            if (nearest_distance(group.elements[a] * group.elements[b]) > match_tol) {
                return {false, "product of elements " + std::to_string(a) + " and " +
                                   std::to_string(b) + " is not in the set"};
            }
        }
    }
    return {true, ""};
}

bool verify_group(const SymmetryGroup& group, double tol) {
    return verify_group_report(group, tol).ok;
}

double invariance_residual(const Matrix& q, const SymmetryGroup& group) {
    require_dims(q, group);
    const double scale = q.norm();
    double worst = 0.0;
    for (const Matrix& l : group.elements) {
        worst = std::max(worst, (q * l - l * q).norm() / scale);
    }
    return worst;
}

bool is_invariant(const Matrix& q, const SymmetryGroup& group, double tol) {
    return invariance_residual(q, group) <= tol;
}

Matrix project_to_invariant(const Matrix& q, const SymmetryGroup& group) {
    require_dims(q, group);
    Matrix sum = Matrix::Zero(group.dim, group.dim);
    for (const Matrix& l : group.elements) {
        sum += l * q * l.transpose();
    }
    return resymmetrize(sum / static_cast<double>(group.elements.size()));
}

Matrix quaternion_rotation(const QuaternionRotationParams& params, Eigen::Index p) {
    const double a = params.alpha, b = params.beta_r, g = params.gamma;
    if (std::abs(a * a + b * b + g * g - 1.0) > 1e-12) {
        throw InvalidInput("rotation axis must satisfy alpha^2 + beta_r^2 + gamma^2 = 1");
    }
    const double c = std::cos(params.theta);
    const double s = std::sin(params.theta);
    Matrix block(4, 4);
    block <<      c,  a * s,  b * s,  g * s,
             -a * s,      c, -g * s,  b * s,
             -b * s,  g * s,      c, -a * s,
             -g * s, -b * s,  a * s,      c;
    return kron_identity(block, p);
}

bool generator_equivalence_check(const Matrix& q, int trials, std::uint64_t seed) {
    if (q.rows() != q.cols() || q.rows() % 4 != 0 || q.rows() == 0) {
        throw InvalidInput("matrix dimension must be a positive multiple of 4");
    }
    const Eigen::Index p = q.rows() / 4;
    // The finite generators are themselves members of the rotation family,
    // so a matrix outside F(K) fails the sampled check with high
    // probability; no separate invariance precheck is needed.
    Rng rng(seed);
    const double scale = q.norm();
    for (int t = 0; t < trials; ++t) {
        QuaternionRotationParams params;
        params.theta = 2.0 * std::numbers::pi * rng.uniform();
        double a, b, g, norm;
        do {
            a = rng.normal();
            b = rng.normal();
            g = rng.normal();
            norm = std::sqrt(a * a + b * b + g * g);
        } while (norm < 1e-8);
        params.alpha = a / norm;
        params.beta_r = b / norm;
        params.gamma = g / norm;

        const Matrix l = quaternion_rotation(params, p);
        if ((q * l - l * q).norm() / scale > 1e-10) return false;
    }
    return true;
}

SampleSet symmetrize_samples(const SampleSet& samples, const SymmetryGroup& group) {
    if (samples.dim() != group.dim) {
        throw DimMismatch("sample dimension does not match group dimension");
    }
    const Eigen::Index n = samples.count();
    Matrix out(samples.dim(), static_cast<Eigen::Index>(group.elements.size()) * n);
    Eigen::Index col = 0;
    for (const Matrix& l : group.elements) {
        out.middleCols(col, n) = l * samples.data();
        col += n;
    }
    return SampleSet(std::move(out));
}

SymmetryGroup read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open group file: " + path);

    std::string line;
    if (!std::getline(in, line) || line.rfind("dim=", 0) != 0) {
        throw InvalidInput("group file must start with a dim=<p> line: " + path);
    }
    const Eigen::Index p = std::stol(line.substr(4));
    if (p < 1) throw InvalidInput("group dimension must be positive");

    SymmetryGroup group{p, {}, "custom"};
    std::vector<std::vector<double>> rows;
    auto flush = [&]() {
        if (rows.empty()) return;
        if (static_cast<Eigen::Index>(rows.size()) != p) {
            throw InvalidInput("group file block has wrong row count");
        }
        Matrix m(p, p);
        for (Eigen::Index i = 0; i < p; ++i) {
            if (static_cast<Eigen::Index>(rows[i].size()) != p) {
                throw InvalidInput("group file row has wrong entry count");
            }
            for (Eigen::Index j = 0; j < p; ++j) m(i, j) = rows[i][j];
        }
        group.elements.push_back(m);
        rows.clear();
    };

    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            flush();
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    flush();

    if (group.elements.empty()) throw InvalidInput("group file contains no matrices");
    return group;
}

}  // namespace symcov
