#include "bsc/spectral.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace bsc {

SpectralReport sym_eigenvalues(const Eigen::MatrixXd& m, double tol) {
    const auto eig = jacobi_eigen(m, tol);
    SpectralReport out;
    out.eigenvalues = eig.values;
    out.residual = (eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose() - m).norm();
    out.mu_star = eig.values.size() >= 2 ? mu_star(eig.values) : 0.0;
    return out;
}

double mu_star(const Eigen::VectorXd& eigenvalues) {
    if (eigenvalues.size() < 2) throw std::invalid_argument("mu_star: dimension must be at least 2");
    Eigen::VectorXd mags = eigenvalues.cwiseAbs();
    std::sort(mags.data(), mags.data() + mags.size(), std::greater<>());
    return mags(1);
}

double mu_star(const Eigen::MatrixXd& m, double tol) {
    if (m.rows() < 2) throw std::invalid_argument("mu_star: dimension must be at least 2");
    return mu_star(jacobi_eigen(m, tol).values);
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    Eigen::MatrixXd a = g.adj.cast<double>();
    a.diagonal() *= 2.0;
    return a;
}

Eigen::MatrixXd normalized_adjacency(const Graph& g) {
    int max_degree = 0;
    for (Eigen::Index i = 0; i < g.n(); ++i) max_degree = std::max(max_degree, g.degree(i));
    if (max_degree == 0) throw std::invalid_argument("normalized_adjacency: graph has no edges");
    return adjacency_matrix(g) / static_cast<double>(max_degree);
}

Eigen::MatrixXd gram(const BipartiteGraph& g) {
    const Eigen::MatrixXd a = g.inc.cast<double>();
    return a * a.transpose();
}

double laplacian_gap(const Graph& g, double tol) {
    if (g.has_loops()) throw std::invalid_argument("laplacian_gap: graph has loops");
    if (g.n() < 2) throw std::invalid_argument("laplacian_gap: need at least two vertices");
    const Eigen::MatrixXd a = g.adj.cast<double>();
    Eigen::MatrixXd q = -a;
    q.diagonal() += a.rowwise().sum();
    const auto values = jacobi_eigen(q, tol).values;
    return values(values.size() - 2);
}

double tanner_bound(const TannerInputs& in) {
    if (in.n <= 0 || in.m <= 0 || in.k <= 0 || in.r <= 0)
        throw std::invalid_argument("tanner_bound: sizes and degrees must be positive");
    if (std::abs(in.n * in.k - in.m * in.r) > 1e-9 * in.n * in.k)
        throw std::invalid_argument("tanner_bound: degrees inconsistent with n k = m r");
    if (!(in.alpha > 0) || in.alpha > in.m / in.n * (1 + 1e-12))
        throw std::invalid_argument("tanner_bound: alpha must lie in (0, m/n]");
    if (in.lambda2 >= in.k * in.r) throw std::invalid_argument("tanner_bound: lambda2 must be below k r");
    return in.k * in.k / (in.alpha * (in.k * in.r - in.lambda2) + in.lambda2);
}

bool ramanujan_check(double c, double d, double mu1, double tol) {
    if (c < 1 || d < 1) throw std::invalid_argument("ramanujan_check: degrees must be at least 1");
    return mu1 <= std::sqrt(c - 1) + std::sqrt(d - 1) + tol;
}

double magnifier_gap_bound(double eps) {
    if (eps < 0) throw std::invalid_argument("magnifier_gap_bound: eps must be non-negative");
    return eps * eps / (4 + 2 * eps * eps);
}

bool magnifier_gap_check(double eps, double lam, double tol) { return lam >= magnifier_gap_bound(eps) - tol; }

}  // namespace bsc
