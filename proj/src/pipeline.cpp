#include "bsc/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "bsc/mc.hpp"
#include "bsc/spectral.hpp"

namespace bsc {

PipelineReport pipeline63(const FiniteGroup& group, const FiniteGroup& left, std::span<const std::size_t> connection,
                          const SampleOptions& sample) {
    if (connection.empty()) throw std::invalid_argument("pipeline63: S is empty");
    if (!left.is_subgroup_of(group)) throw std::invalid_argument("pipeline63: L is not a subgroup");
    if (group.order() / left.order() < 2) throw std::invalid_argument("pipeline63: [G:L] must be at least 2");

    PipelineReport rep;
    std::vector<std::size_t> with_one(connection.begin(), connection.end());
    with_one.push_back(0);
    for (auto s : with_one)
        for (const auto& l : left.elements()) rep.s_prime.push_back(group.multiply(s, *group.index_of(l)));

    const auto one = groups::trivial(group.degree());
    rep.concentrator = bicoset_graph(group, left, one, rep.s_prime);
    rep.quotient = coset_graph(group, left, product_multisets(group, with_one).all);

    const auto cay = cayley_graph(group, connection);
    const auto mode = group.order() <= kExhaustiveCap ? CheckMode::exhaustive : CheckMode::sampled;
    rep.magnifier = magnifier_constant(cay, mode, sample);

    Graph stripped = rep.quotient;
    stripped.adj.diagonal().setZero();
    rep.laplacian_gap = laplacian_gap(stripped);
    rep.gap_bound = magnifier_gap_bound(rep.magnifier.worst_ratio);
    rep.gap_check = magnifier_gap_check(rep.magnifier.worst_ratio, rep.laplacian_gap);

    const auto eig = jacobi_eigen(gram(rep.concentrator)).values;
    rep.lambda1 = eig(0);
    rep.lambda2 = eig(1);
    rep.spectral_gap = rep.lambda1 - rep.lambda2 > 1e-9 * std::max(1.0, rep.lambda1);

    const double n = static_cast<double>(rep.concentrator.n_in());
    const double m = static_cast<double>(rep.concentrator.n_out());
    TannerInputs t{n, m, static_cast<double>(rep.concentrator.input_degree(0)),
                   static_cast<double>(rep.concentrator.output_degree(0)), rep.lambda2, m / n};
    rep.alpha = t.alpha;
    if (rep.spectral_gap) {
        rep.tanner = tanner_bound(t);
        if (rep.concentrator.n_in() <= static_cast<Eigen::Index>(kExhaustiveCap)) {
            t.alpha = std::min(1.0, t.alpha);
            rep.tanner_report = bsc_check(rep.concentrator, t.alpha, tanner_bound(t));
            rep.tanner_checked = true;
        }
    }

    rep.s_generates = generates(group, connection);
    rep.concentrator_components = connected_components(rep.concentrator).count;
    rep.quotient_components = connected_components(rep.quotient).count;
    if (!rep.s_generates) rep.warnings.push_back("S does not generate G");
    if (rep.concentrator_components > 1) rep.warnings.push_back("concentrator is disconnected");
    if (rep.quotient_components > 1) rep.warnings.push_back("quotient graph D is disconnected");
    if (!rep.spectral_gap) rep.warnings.push_back("lambda1 = lambda2; Tanner bound not evaluated");
    return rep;
}

}  // namespace bsc
