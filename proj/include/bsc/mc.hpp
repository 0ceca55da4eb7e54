#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bsc/permgroup.hpp"
#include "bsc/repr.hpp"

namespace bsc {

struct ProductMultisets {
    std::vector<std::size_t> all;        // s_i s_j^-1 over all ordered pairs (i, j), row-major
    std::vector<std::size_t> off_diagonal;  // the same with the k pairs i == j removed
};

ProductMultisets product_multisets(const FiniteGroup& group, std::span<const std::size_t> connection);

/// Seed of trial `index` within a batch seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// One Monte Carlo experiment: `trials` random multisets S of size k and the
/// resulting second eigenvalues, compared with the tail bound.
struct TrialBatch {
    std::string group_id;
    std::vector<std::string> subgroup_ids;
    BoundVariant variant = BoundVariant::cayley;
    std::uint64_t k = 0;
    double eps = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    std::vector<double> mu_star;       // per trial
    std::vector<double> top_eigenvalue;  // per trial, bicoset batches only
    std::uint64_t exceedances = 0;     // trials with mu* > threshold
    std::uint64_t flagged_trials = 0;  // coset graphs that were not regular
    double threshold = 0;
    double empirical_tail = 0;

    /// Dimension sums feeding the bound. For Cayley batches both equal D(G);
    /// otherwise `dim_sum_primary` omits and `dim_sum_support` keeps the
    /// irreducibles with an H-fixed (L-fixed) vector, the trivial one excluded.
    std::uint64_t dim_sum_primary = 0;
    std::uint64_t dim_sum_support = 0;
    double bound_primary = 0;
    double bound_support = 0;
    bool vacuous = false;    // every bound variant is >= 1
    bool falsified = false;  // empirical tail exceeds the largest non-vacuous bound

    // Bicoset batches with L = N: trials where diag(A A^T) = k, so that
    // M* = (A A^T - k I) / (2 (k^2 - k)) is the normalized Cayley operator of B*,
    // are compared eigenvalue by eigenvalue; the others are skipped.
    std::uint64_t cross_checked = 0;
    std::uint64_t cross_skipped = 0;
    double cross_max_error = 0;

    double wall_seconds = 0;
};

/// Cayley graphs X(G, S); mu* of the adjacency normalized by its degree 2k.
TrialBatch run_cayley_trials(const FiniteGroup& group, std::uint64_t k, double eps, std::uint64_t trials,
                             std::uint64_t seed, std::string group_id = "G");

/// Coset graphs X(G, H; S), normalized by their degree (maximum degree, and
/// flagged, when not regular).
TrialBatch run_coset_trials(const FiniteGroup& group, const FiniteGroup& sub, std::uint64_t k, double eps,
                            std::uint64_t trials, std::uint64_t seed, std::string group_id = "G",
                            std::string sub_id = "H");

/// Bi-coset graphs C(G, L, N; S). With A the multiplicity incidence,
/// M = A A^T / (2 k^2 |L| |N|) has top eigenvalue exactly 1/2 and reduces to
/// A A^T / (2 k^2) for L = N = {1}; mu*(M) is compared with
/// eps + (1 - eps) / (2k).
TrialBatch run_bicoset_trials(const FiniteGroup& group, const FiniteGroup& left, const FiniteGroup& right,
                              std::uint64_t k, double eps, std::uint64_t trials, std::uint64_t seed,
                              std::string group_id = "G", std::string left_id = "L", std::string right_id = "N");

/// Largest difference between the spectra of 2 k^2 M - k I and the adjacency of
/// the Cayley multigraph of B*, for L = N = {1} and S with distinct elements.
double cross_normalization_error(const FiniteGroup& group, std::span<const std::size_t> connection);

/// Normalized bi-coset operator for one connection multiset.
Eigen::MatrixXd bicoset_operator(const FiniteGroup& group, const FiniteGroup& left, const FiniteGroup& right,
                                 std::span<const std::size_t> connection);

struct ReportOptions {
    bool include_trials = false;  // per-trial values in JSON
    bool include_timing = false;  // wall_seconds column; breaks byte-for-byte reproducibility
};

/// One row per batch ordered by (group, k, eps); numbers carry 12 significant digits.
std::string aggregate_csv(std::vector<TrialBatch> batches, const ReportOptions& opts = {});
std::string aggregate_json(std::vector<TrialBatch> batches, const ReportOptions& opts = {});

}  // namespace bsc
