#include "bsc/mc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <tuple>

#include "bsc/graphs.hpp"
#include "bsc/io.hpp"
#include "bsc/spectral.hpp"

namespace bsc {

namespace {

using Clock = std::chrono::steady_clock;

void require_batch(std::uint64_t k, double eps, std::uint64_t trials) {
    if (k < 1) throw std::invalid_argument("monte carlo: k must be at least 1");
    if (trials < 1) throw std::invalid_argument("monte carlo: trials must be at least 1");
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("monte carlo: eps must lie in (0, 1)");
}

void finish(TrialBatch& b, Clock::time_point start) {
    for (double mu : b.mu_star) b.exceedances += mu > b.threshold;
    b.empirical_tail = static_cast<double>(b.exceedances) / static_cast<double>(b.trials);
    BoundInputs in{static_cast<double>(b.dim_sum_primary), b.k, b.eps, b.variant};
    const auto primary = bound_eval(in);
    in.dim_sum = static_cast<double>(b.dim_sum_support);
    const auto support = bound_eval(in);
    b.threshold = primary.threshold;
    b.bound_primary = primary.probability_bound;
    b.bound_support = support.probability_bound;
    const double largest = std::max(b.bound_primary, b.bound_support);
    b.vacuous = primary.vacuous && support.vacuous;
    b.falsified = largest < 1 && b.empirical_tail > largest;
    b.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

// The threshold must be known before exceedances are counted.
double threshold_for(BoundVariant v, std::uint64_t k, double eps) {
    return bound_eval({0, k, eps, v}).threshold;
}

}  // namespace

ProductMultisets product_multisets(const FiniteGroup& group, std::span<const std::size_t> connection) {
    ProductMultisets out;
    const auto k = connection.size();
    out.all.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const auto p = group.multiply(connection[i], group.inverse(connection[j]));
            out.all.push_back(p);
            if (i != j) out.off_diagonal.push_back(p);
        }
    }
    return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    return seed + index * 0x9E3779B97F4A7C15ULL;
}

TrialBatch run_cayley_trials(const FiniteGroup& group, std::uint64_t k, double eps, std::uint64_t trials,
                             std::uint64_t seed, std::string group_id) {
    require_batch(k, eps, trials);
    const auto start = Clock::now();
    TrialBatch b;
    b.group_id = std::move(group_id);
    b.variant = BoundVariant::cayley;
    b.k = k;
    b.eps = eps;
    b.trials = trials;
    b.seed = seed;
    b.dim_sum_primary = b.dim_sum_support = dim_sum(character_table(group));
    b.threshold = threshold_for(b.variant, k, eps);

    b.mu_star.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto s = sample_multiset(group, k, trial_seed(seed, t));
        b.mu_star.push_back(mu_star(normalized_adjacency(cayley_graph(group, s))));
    }
    finish(b, start);
    return b;
}

TrialBatch run_coset_trials(const FiniteGroup& group, const FiniteGroup& sub, std::uint64_t k, double eps,
                            std::uint64_t trials, std::uint64_t seed, std::string group_id, std::string sub_id) {
    require_batch(k, eps, trials);
    const auto start = Clock::now();
    TrialBatch b;
    b.group_id = std::move(group_id);
    b.subgroup_ids = {std::move(sub_id)};
    b.variant = BoundVariant::coset;
    b.k = k;
    b.eps = eps;
    b.trials = trials;
    b.seed = seed;
    const auto table = character_table(group);
    const auto rel = dim_sum_relative(group, table, sub);
    b.dim_sum_primary = rel.without_trivial;
    b.dim_sum_support = rel.support;
    b.threshold = threshold_for(b.variant, k, eps);

    b.mu_star.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto s = sample_multiset(group, k, trial_seed(seed, t));
        const auto x = coset_graph(group, sub, s);
        bool regular = true;
        for (Eigen::Index i = 1; i < x.n(); ++i) regular &= x.degree(i) == x.degree(0);
        b.flagged_trials += !regular;
        b.mu_star.push_back(mu_star(normalized_adjacency(x)));
    }
    finish(b, start);
    return b;
}

Eigen::MatrixXd bicoset_operator(const FiniteGroup& group, const FiniteGroup& left, const FiniteGroup& right,
                                 std::span<const std::size_t> connection) {
    const auto x = bicoset_graph(group, left, right, connection);
    const double k = static_cast<double>(connection.size());
    return gram(x) / (2 * k * k * static_cast<double>(left.order()) * static_cast<double>(right.order()));
}

double cross_normalization_error(const FiniteGroup& group, std::span<const std::size_t> connection) {
    const auto k = connection.size();
    if (k < 2) throw std::invalid_argument("cross_normalization_error: k must be at least 2");
    const auto one = groups::trivial(group.degree());
    const auto a = gram(bicoset_graph(group, one, one, connection));
    if ((a.diagonal().array() != static_cast<double>(k)).any())
        throw std::invalid_argument("cross_normalization_error: diag(A A^T) differs from k");
    const double kk = static_cast<double>(k);
    const Eigen::MatrixXd star =
        (a - kk * Eigen::MatrixXd::Identity(a.rows(), a.cols())) / (2 * (kk * kk - kk));
    const auto b = product_multisets(group, connection);
    const Eigen::MatrixXd cay = normalized_adjacency(cayley_graph(group, b.off_diagonal)) / 2;
    return (jacobi_eigen(star).values - jacobi_eigen(cay).values).cwiseAbs().maxCoeff();
}

TrialBatch run_bicoset_trials(const FiniteGroup& group, const FiniteGroup& left, const FiniteGroup& right,
                              std::uint64_t k, double eps, std::uint64_t trials, std::uint64_t seed,
                              std::string group_id, std::string left_id, std::string right_id) {
    require_batch(k, eps, trials);
    if (!left.is_subgroup_of(group) || !right.is_subgroup_of(group))
        throw std::invalid_argument("run_bicoset_trials: L and N must be subgroups");
    if (group.order() / left.order() < 2)
        throw std::invalid_argument("run_bicoset_trials: [G:L] < 2 leaves no second eigenvalue");
    const auto start = Clock::now();
    TrialBatch b;
    b.group_id = std::move(group_id);
    b.subgroup_ids = {std::move(left_id), std::move(right_id)};
    b.variant = BoundVariant::bicoset;
    b.k = k;
    b.eps = eps;
    b.trials = trials;
    b.seed = seed;
    const auto table = character_table(group);
    const auto rel = dim_sum_relative(group, table, left);
    b.dim_sum_primary = rel.without_trivial;
    b.dim_sum_support = rel.support;
    b.threshold = threshold_for(b.variant, k, eps);

    const bool same = left.order() == right.order() && left.is_subgroup_of(right);
    b.mu_star.reserve(trials);
    b.top_eigenvalue.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto s = sample_multiset(group, k, trial_seed(seed, t));
        const auto eig = jacobi_eigen(bicoset_operator(group, left, right, s));
        b.top_eigenvalue.push_back(eig.values(0));
        b.mu_star.push_back(mu_star(eig.values));
        if (!same) continue;
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        if (left.order() == 1 && k >= 2 && distinct) {
            ++b.cross_checked;
            b.cross_max_error = std::max(b.cross_max_error, cross_normalization_error(group, s));
        } else {
            ++b.cross_skipped;
        }
    }
    finish(b, start);
    return b;
}

namespace {

void sort_batches(std::vector<TrialBatch>& batches) {
    std::stable_sort(batches.begin(), batches.end(), [](const TrialBatch& a, const TrialBatch& b) {
        return std::tie(a.group_id, a.k, a.eps) < std::tie(b.group_id, b.k, b.eps);
    });
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

std::string aggregate_csv(std::vector<TrialBatch> batches, const ReportOptions& opts) {
    sort_batches(batches);
    std::string out =
        "group,subgroups,variant,k,eps,trials,seed,threshold,empirical_tail,exceedances,flagged_trials,"
        "dim_sum_primary,dim_sum_support,bound_primary,bound_support,vacuous,falsified";
    if (opts.include_timing) out += ",wall_seconds";
    out += '\n';
    for (const auto& b : batches) {
        out += b.group_id + ',' + join(b.subgroup_ids, ';') + ',' + std::string(variant_name(b.variant)) + ',' +
               std::to_string(b.k) + ',' + format_sig(b.eps) + ',' + std::to_string(b.trials) + ',' +
               std::to_string(b.seed) + ',' + format_sig(b.threshold) + ',' + format_sig(b.empirical_tail) + ',' +
               std::to_string(b.exceedances) + ',' + std::to_string(b.flagged_trials) + ',' +
               std::to_string(b.dim_sum_primary) + ',' + std::to_string(b.dim_sum_support) + ',' +
               format_sig(b.bound_primary) + ',' + format_sig(b.bound_support) + ',' +
               (b.vacuous ? "true" : "false") + ',' + (b.falsified ? "true" : "false");
        if (opts.include_timing) out += ',' + format_sig(b.wall_seconds);
        out += '\n';
    }
    return out;
}

std::string aggregate_json(std::vector<TrialBatch> batches, const ReportOptions& opts) {
    sort_batches(batches);
    using nlohmann::ordered_json;
    auto rounded = [](const std::vector<double>& xs) {
        ordered_json arr = ordered_json::array();
        for (double x : xs) arr.push_back(round_sig(x));
        return arr;
    };
    ordered_json rows = ordered_json::array();
    for (const auto& b : batches) {
        ordered_json j;
        j["group"] = b.group_id;
        j["subgroups"] = b.subgroup_ids;
        j["variant"] = std::string(variant_name(b.variant));
        j["k"] = b.k;
        j["eps"] = round_sig(b.eps);
        j["trials"] = b.trials;
        j["seed"] = b.seed;
        j["threshold"] = round_sig(b.threshold);
        j["empirical_tail"] = round_sig(b.empirical_tail);
        j["exceedances"] = b.exceedances;
        j["flagged_trials"] = b.flagged_trials;
        j["dim_sum_primary"] = b.dim_sum_primary;
        j["dim_sum_support"] = b.dim_sum_support;
        j["bound_primary"] = round_sig(b.bound_primary);
        j["bound_support"] = round_sig(b.bound_support);
        j["vacuous"] = b.vacuous;
        j["falsified"] = b.falsified;
        if (!b.top_eigenvalue.empty()) {
            const auto [lo, hi] = std::minmax_element(b.top_eigenvalue.begin(), b.top_eigenvalue.end());
            j["top_eigenvalue"] = {{"min", round_sig(*lo)}, {"max", round_sig(*hi)}};
        }
        if (b.cross_checked + b.cross_skipped > 0) {
            j["cross_normalization"] = {{"checked", b.cross_checked},
                                        {"skipped", b.cross_skipped},
                                        {"max_error", round_sig(b.cross_max_error)}};
        }
        if (opts.include_trials) {
            j["mu_star"] = rounded(b.mu_star);
            if (!b.top_eigenvalue.empty()) j["top_eigenvalues"] = rounded(b.top_eigenvalue);
        }
        if (opts.include_timing) j["wall_seconds"] = round_sig(b.wall_seconds);
        rows.push_back(std::move(j));
    }
    ordered_json doc;
    doc["batches"] = std::move(rows);
    return doc.dump(2) + "\n";
}

}  // namespace bsc
