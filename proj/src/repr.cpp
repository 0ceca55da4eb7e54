#include "bsc/repr.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bsc/rng.hpp"

namespace bsc {

namespace {

using cd = std::complex<double>;

struct Irreducible {
    int degree;
    Eigen::VectorXcd values;
};

// Ascending degree; within a degree, larger real parts first, then larger
// imaginary parts, compared class by class.
bool irreducible_before(const Irreducible& a, const Irreducible& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    constexpr double eps = 1e-7;
    for (Eigen::Index c = 0; c < a.values.size(); ++c) {
        const double dr = a.values(c).real() - b.values(c).real();
        if (std::abs(dr) > eps) return dr > 0;
    }
    for (Eigen::Index c = 0; c < a.values.size(); ++c) {
        const double di = a.values(c).imag() - b.values(c).imag();
        if (std::abs(di) > eps) return di > 0;
    }
    return false;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& group, double tol, std::uint64_t seed) {
    CharacterTable table;
    table.group_order = group.order();
    table.classes = conjugacy_classes(group);
    const std::size_t h = table.classes.size();
    if (h > kMaxClasses) throw std::invalid_argument("character_table: too many conjugacy classes");

    table.class_of.assign(group.order(), 0);
    for (std::size_t c = 0; c < h; ++c) {
        table.class_sizes.push_back(table.classes[c].size());
        for (auto x : table.classes[c]) table.class_of[x] = c;
    }

    // structure[i](j, l) = #{x in C_i : x^-1 z_l in C_j}, z_l the least member of C_l.
    std::vector<Eigen::MatrixXd> structure(h, Eigen::MatrixXd::Zero(h, h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t l = 0; l < h; ++l) {
            const auto z = table.classes[l].front();
            for (auto x : table.classes[i]) structure[i](table.class_of[group.multiply(group.inverse(x), z)], l) += 1;
        }

    const double order = static_cast<double>(group.order());
    Rng rng(seed);
    std::vector<Irreducible> irreps;
    bool split = false;
    for (int attempt = 0; attempt < 8 && !split; ++attempt) {
        Eigen::MatrixXd mix = Eigen::MatrixXd::Zero(h, h);
        for (std::size_t i = 0; i < h; ++i) mix += (rng.uniform() - 0.5) * structure[i];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(mix.cast<cd>());
        if (solver.info() != Eigen::Success) continue;
        const auto& lambda = solver.eigenvalues();

        double gap = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < h; ++a)
            for (std::size_t b = a + 1; b < h; ++b) gap = std::min(gap, std::abs(lambda(a) - lambda(b)));
        if (h > 1 && gap < 1e-6 * std::max(1.0, mix.norm())) continue;

        irreps.clear();
        split = true;
        for (std::size_t e = 0; e < h && split; ++e) {
            Eigen::VectorXcd omega = solver.eigenvectors().col(e);
            if (std::abs(omega(0)) < 1e-12) {
                split = false;
                break;
            }
            omega /= omega(0);
            for (std::size_t i = 0; i < h; ++i) {
                const Eigen::VectorXcd lhs = structure[i].cast<cd>() * omega;
                if ((lhs - omega(i) * omega).norm() > 1e-6 * std::max(1.0, omega.norm() * omega.norm())) {
                    split = false;
                    break;
                }
            }
            if (!split) break;
            double norm = 0;
            for (std::size_t j = 0; j < h; ++j) norm += std::norm(omega(j)) / static_cast<double>(table.class_sizes[j]);
            const double degree = std::sqrt(order / norm);
            const int rounded = static_cast<int>(std::lround(degree));
            Eigen::VectorXcd chi(h);
            for (std::size_t j = 0; j < h; ++j) chi(j) = omega(j) * static_cast<double>(rounded) / static_cast<double>(table.class_sizes[j]);
            irreps.push_back({rounded, chi});
        }
    }
    if (!split) throw std::runtime_error("character_table: could not separate the class algebra");

    std::sort(irreps.begin(), irreps.end(), irreducible_before);
    std::uint64_t sum_sq = 0;
    for (const auto& r : irreps) sum_sq += static_cast<std::uint64_t>(r.degree) * r.degree;
    if (sum_sq != group.order())
        throw std::runtime_error("character_table: sum of squared degrees " + std::to_string(sum_sq) +
                                 " differs from |G| = " + std::to_string(group.order()));

    table.chars.resize(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(h));
    for (std::size_t r = 0; r < h; ++r) {
        table.degrees.push_back(irreps[r].degree);
        table.chars.row(r) = irreps[r].values.transpose();
    }

    double worst = 0;
    for (std::size_t a = 0; a < h; ++a)
        for (std::size_t b = 0; b < h; ++b) {
            cd row = 0, col = 0;
            for (std::size_t c = 0; c < h; ++c) {
                row += static_cast<double>(table.class_sizes[c]) * table.chars(a, c) * std::conj(table.chars(b, c));
                col += table.chars(c, a) * std::conj(table.chars(c, b));
            }
            row /= order;
            const double col_expected = a == b ? order / static_cast<double>(table.class_sizes[a]) : 0.0;
            worst = std::max(worst, std::abs(row - cd(a == b ? 1.0 : 0.0)));
            worst = std::max(worst, std::abs(col - col_expected) / (order / static_cast<double>(table.class_sizes[a])));
        }
    table.orthogonality_residual = worst;
    if (worst > tol) throw std::runtime_error("character_table: orthogonality check failed");
    return table;
}

std::uint64_t dim_sum(const CharacterTable& table) {
    std::uint64_t d = 0;
    for (int x : table.degrees) d += static_cast<std::uint64_t>(x);
    if (table.group_order > 1) {
        const double root = std::sqrt(static_cast<double>(table.group_order));
        if (!(static_cast<double>(d) > root && d <= table.group_order))
            throw std::logic_error("dim_sum: outside (sqrt|G|, |G|]");
    }
    return d;
}

RelativeDimSum dim_sum_relative(const FiniteGroup& group, const CharacterTable& table, const FiniteGroup& sub,
                                double tol) {
    if (!sub.is_subgroup_of(group)) throw std::invalid_argument("dim_sum_relative: not a subgroup");
    std::vector<std::size_t> class_count(table.classes.size(), 0);
    for (const auto& h : sub.elements()) ++class_count[table.class_of[*group.index_of(h)]];

    RelativeDimSum out;
    for (std::size_t r = 0; r < table.size(); ++r) {
        std::complex<double> sum = 0;
        for (std::size_t c = 0; c < class_count.size(); ++c)
            sum += static_cast<double>(class_count[c]) * table.chars(r, c);
        sum /= static_cast<double>(sub.order());
        const long mult = std::lround(sum.real());
        if (std::abs(sum - std::complex<double>(static_cast<double>(mult), 0)) > tol || mult < 0)
            throw std::runtime_error("dim_sum_relative: non-integral restriction multiplicity");
        out.trivial_multiplicity.push_back(static_cast<int>(mult));
        if (mult == 0) out.without_trivial += static_cast<std::uint64_t>(table.degrees[r]);
        else if (r != 0) out.support += static_cast<std::uint64_t>(table.degrees[r]);
    }
    return out;
}

double entropy_hp(double p, double x) {
    if (!(p > 0 && p < 1)) throw std::invalid_argument("entropy_hp: p must lie in (0, 1)");
    if (!(x >= 0 && x <= 1)) throw std::invalid_argument("entropy_hp: x must lie in [0, 1]");
    const double a = x > 0 ? x * std::log(x / p) : 0.0;
    const double b = x < 1 ? (1 - x) * std::log((1 - x) / (1 - p)) : 0.0;
    return a + b;
}

BoundVariant parse_bound_variant(std::string_view name) {
    if (name == "thm14") return BoundVariant::cayley;
    if (name == "thm15") return BoundVariant::coset;
    if (name == "thm18") return BoundVariant::bicoset;
    throw std::invalid_argument("unknown bound variant: " + std::string(name));
}

std::string_view variant_name(BoundVariant v) {
    switch (v) {
        case BoundVariant::cayley: return "thm14";
        case BoundVariant::coset: return "thm15";
        case BoundVariant::bicoset: return "thm18";
    }
    return "?";
}

BoundResult bound_eval(const BoundInputs& in) {
    if (!(in.eps > 0 && in.eps < 1)) throw std::invalid_argument("bound_eval: eps must lie in (0, 1)");
    if (in.k < 1) throw std::invalid_argument("bound_eval: k must be at least 1");
    if (in.dim_sum < 0) throw std::invalid_argument("bound_eval: negative dimension sum");

    const double k = static_cast<double>(in.k);
    BoundResult out;
    if (in.variant == BoundVariant::bicoset) {
        if (in.eps > 0.5) throw std::invalid_argument("bound_eval: bicoset bound needs eps <= 1/2");
        out.threshold = in.eps + (1 - in.eps) / (2 * k);
        out.probability_bound = 2 * in.dim_sum * std::exp(-(k * k - k) * entropy_hp(0.5, 0.5 + in.eps));
    } else {
        out.threshold = in.eps;
        out.probability_bound = 2 * in.dim_sum * std::exp(-k * entropy_hp(0.5, (1 + in.eps) / 2));
    }
    out.vacuous = out.probability_bound >= 1;
    return out;
}

}  // namespace bsc
