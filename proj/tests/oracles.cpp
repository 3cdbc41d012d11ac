#include "oracles.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <numbers>

namespace bistab::oracle {

namespace {

// All exponent vectors of total degree k in `vars` variables.
void enumerate_monomials(int vars, int k, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
    int used = 0;
    for (int e : current) used += e;
    if (static_cast<int>(current.size()) == vars - 1) {
        current.push_back(k - used);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = 0; e <= k - used; ++e) {
        current.push_back(e);
        enumerate_monomials(vars, k, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> monomials(int vars, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    enumerate_monomials(vars, k, current, out);
    return out;
}

// Rank over the rationals by fraction-free Gaussian elimination.
long rational_rank(std::vector<std::vector<Rational>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational factor = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

BigInt harmonic_dimension(int k, int vars) {
    const auto domain = monomials(vars, k);
    if (k < 2) return BigInt(static_cast<long>(domain.size()));
    const auto image = monomials(vars, k - 2);

    std::map<std::vector<int>, std::size_t> image_index;
    for (std::size_t i = 0; i < image.size(); ++i) image_index[image[i]] = i;

    // matrix of Laplacian: x^a -> sum_i a_i (a_i - 1) x^{a - 2 e_i}
    std::vector<std::vector<Rational>> matrix(
        image.size(), std::vector<Rational>(domain.size(), Rational(0)));
    for (std::size_t col = 0; col < domain.size(); ++col) {
        for (int v = 0; v < vars; ++v) {
            const int a = domain[col][v];
            if (a < 2) continue;
            std::vector<int> target = domain[col];
            target[v] -= 2;
            matrix[image_index.at(target)][col] = Rational(static_cast<long>(a) * (a - 1));
        }
    }
    return BigInt(static_cast<long>(domain.size()) - rational_rank(std::move(matrix)));
}

std::vector<double> circle_fd_eigenvalues(int nodes, double radius) {
    const double h = 2.0 * std::numbers::pi * radius / nodes;
    Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(nodes, nodes);
    const double c0 = -30.0 / (12.0 * h * h);
    const double c1 = 16.0 / (12.0 * h * h);
    const double c2 = -1.0 / (12.0 * h * h);
    for (int i = 0; i < nodes; ++i) {
        laplacian(i, i) = c0;
        laplacian(i, (i + 1) % nodes) += c1;
        laplacian(i, (i + nodes - 1) % nodes) += c1;
        laplacian(i, (i + 2) % nodes) += c2;
        laplacian(i, (i + nodes - 2) % nodes) += c2;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
    std::vector<double> values(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + nodes);
    std::sort(values.begin(), values.end(), std::greater<double>());
    return values;
}

std::vector<std::pair<double, int>> sphere2_fd_levels(int grid, int max_azimuthal,
                                                      double min_eigenvalue) {
    const double h = std::numbers::pi / grid;
    std::vector<std::pair<double, int>> hits;  // (eigenvalue, weight)
    for (int mu = 0; mu <= max_azimuthal; ++mu) {
        Eigen::VectorXd diag(grid), subdiag(grid - 1);
        for (int j = 0; j < grid; ++j) {
            const double theta = (j + 0.5) * h;
            const double w = std::sin(theta);
            const double w_plus = std::sin((j + 1) * h);
            const double w_minus = std::sin(j * h);
            diag(j) = -(w_plus + w_minus) / (w * h * h) -
                      static_cast<double>(mu) * mu / (w * w);
            if (j + 1 < grid) {
                const double w_next = std::sin((j + 1.5) * h);
                subdiag(j) = w_plus / (h * h * std::sqrt(w * w_next));
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);
        for (int j = 0; j < grid; ++j) {
            const double value = solver.eigenvalues()(j);
            if (value > min_eigenvalue) hits.emplace_back(value, mu == 0 ? 1 : 2);
        }
    }
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<std::pair<double, int>> clusters;
    for (const auto& [value, weight] : hits) {
        if (!clusters.empty() && std::abs(clusters.back().first - value) < 0.5) {
            clusters.back().second += weight;
        } else {
            clusters.emplace_back(value, weight);
        }
    }
    return clusters;
}

std::vector<std::pair<double, int>> cluster_levels(const std::vector<double>& sorted_desc,
                                                   double gap) {
    std::vector<std::pair<double, int>> clusters;
    for (const double value : sorted_desc) {
        if (!clusters.empty() && std::abs(clusters.back().first - value) < gap)
            clusters.back().second += 1;
        else
            clusters.emplace_back(value, 1);
    }
    return clusters;
}

}  // namespace bistab::oracle
