#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bsc/graphs.hpp"

namespace bsc {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kDefaultMaxSweeps = 100;

template <typename Scalar>
struct SymmetricEigen {
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    Vector values;   // descending
    Matrix vectors;  // column i belongs to values(i)
    int sweeps = 0;
};

/// Off-diagonal Frobenius norm.
template <typename Derived>
typename Derived::RealScalar off_diagonal_norm(const Eigen::MatrixBase<Derived>& m) {
    using Real = typename Derived::RealScalar;
    Real sum = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (i != j) sum += m(i, j) * m(i, j);
    return std::sqrt(sum);
}

/// Cyclic Jacobi eigensolver for real symmetric matrices.
///
/// Sweeps row by row over the strict upper triangle, annihilating each entry
/// with a Givens rotation, until the off-diagonal norm is at most
/// tol * ||M||_F. One further sweep is then made; convergence is quadratic, so
/// that sweep drives the off-diagonal part to rounding level.
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& input,
                                                       typename Derived::RealScalar tol = kDefaultTol,
                                                       int max_sweeps = kDefaultMaxSweeps) {
    using Scalar = typename Derived::Scalar;
    using Matrix = typename SymmetricEigen<Scalar>::Matrix;

    if (input.rows() != input.cols()) throw std::invalid_argument("jacobi_eigen: matrix is not square");
    const Eigen::Index n = input.rows();
    Matrix a = input;
    const Scalar norm = a.norm();
    if ((a - a.transpose()).norm() > tol * std::max(norm, Scalar(1)))
        throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");

    Matrix v = Matrix::Identity(n, n);
    int sweeps = 0;
    bool polished = false;
    for (;;) {
        if (off_diagonal_norm(a) <= tol * norm) {
            if (polished) break;
            polished = true;
        }
        if (sweeps == max_sweeps) throw std::runtime_error("jacobi_eigen: no convergence within sweep cap");
        ++sweeps;
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Scalar apq = a(p, q);
                if (apq == Scalar(0)) continue;
                const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
                const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) /
                                 (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
                const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
                const Scalar s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = Scalar(0);
                a(q, p) = Scalar(0);
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), Eigen::Index(0));
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) > a(j, j); });

    SymmetricEigen<Scalar> out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values(i) = a(order[i], order[i]);
        out.vectors.col(i) = v.col(order[i]);
    }
    out.sweeps = sweeps;
    return out;
}

/// Eigenvalue summary of a symmetric matrix.
struct SpectralReport {
    Eigen::VectorXd eigenvalues;  // descending
    double mu_star = 0;           // second-largest absolute value; 0 for 1x1
    double residual = 0;          // ||Q diag(eigenvalues) Q^T - M||_F
};

SpectralReport sym_eigenvalues(const Eigen::MatrixXd& m, double tol = kDefaultTol);

/// Second entry of the eigenvalues sorted by absolute value, descending.
double mu_star(const Eigen::VectorXd& eigenvalues);
double mu_star(const Eigen::MatrixXd& m, double tol = kDefaultTol);

/// Adjacency matrix with each loop contributing 2 on the diagonal.
Eigen::MatrixXd adjacency_matrix(const Graph& g);
/// Adjacency divided by the maximum degree (the degree, for regular graphs).
Eigen::MatrixXd normalized_adjacency(const Graph& g);
/// A A^T for the inputs-by-outputs incidence A.
Eigen::MatrixXd gram(const BipartiteGraph& g);

/// Second-smallest eigenvalue of diag(deg) - A. Rejects graphs with loops.
double laplacian_gap(const Graph& g, double tol = kDefaultTol);

struct TannerInputs {
    double n = 0;  // inputs
    double m = 0;  // outputs
    double k = 0;  // input degree
    double r = 0;  // output degree
    double lambda2 = 0;
    double alpha = 0;
};

/// Lower bound k^2 / (alpha (k r - lambda2) + lambda2) on the expansion of input
/// sets of size at most alpha n.
double tanner_bound(const TannerInputs& in);

/// mu1 <= sqrt(c - 1) + sqrt(d - 1) within tol.
bool ramanujan_check(double c, double d, double mu1, double tol = 1e-9);

/// The magnifier-to-gap inequality lam >= eps^2 / (4 + 2 eps^2).
double magnifier_gap_bound(double eps);
bool magnifier_gap_check(double eps, double lam, double tol = kDefaultTol);

}  // namespace bsc
