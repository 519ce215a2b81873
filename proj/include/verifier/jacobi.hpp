#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <utility>

namespace hv {

/**
 * Cyclic Jacobi eigensolver for small symmetric matrices. Returns eigenvalues
 * sorted descending and the orthogonal matrix of matching eigenvector columns.
 */
template <int N>
std::pair<Eigen::Matrix<double, N, 1>, Eigen::Matrix<double, N, N>> jacobi_eigen(
    Eigen::Matrix<double, N, N> a, double tol = 1e-13, int max_sweeps = 50) {
    Eigen::Matrix<double, N, N> v = Eigen::Matrix<double, N, N>::Identity();
    double scale = a.cwiseAbs().maxCoeff();
    if (scale == 0.0) scale = 1.0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < N - 1; ++p)
            for (int q = p + 1; q < N; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= tol * scale) break;
        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                if (std::abs(a(p, q)) <= tol * scale * 1e-3) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                Eigen::Matrix<double, N, N> rot = Eigen::Matrix<double, N, N>::Identity();
                rot(p, p) = c;
                rot(q, q) = c;
                rot(p, q) = s;
                rot(q, p) = -s;
                a = rot.transpose() * a * rot;
                v = v * rot;
            }
        }
    }
    Eigen::Matrix<double, N, 1> w = a.diagonal();
    // selection sort, descending, carrying eigenvector columns along
    for (int i = 0; i < N - 1; ++i) {
        int best = i;
        for (int j = i + 1; j < N; ++j)
            if (w(j) > w(best)) best = j;
        if (best != i) {
            std::swap(w(i), w(best));
            v.col(i).swap(v.col(best));
        }
    }
    return {w, v};
}

}  // namespace hv
