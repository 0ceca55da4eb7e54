#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsc/graphs.hpp"

namespace bsc {

enum class CheckMode { exhaustive, sampled };

/// Largest vertex side that exhaustive enumeration accepts.
inline constexpr std::size_t kExhaustiveCap = 24;

struct SampleOptions {
    std::uint64_t budget = 1000;  // subsets drawn per eligible size
    std::uint64_t seed = 0;
};

/// Outcome of a subset-expansion check.
///
/// Exhaustive reports are certificates: worst_ratio is the exact minimum and
/// worst_set the lexicographically smallest set attaining it. Sampled reports
/// only bound the minimum from above, so `verdict` then means "not refuted".
struct ConcentrationReport {
    CheckMode mode = CheckMode::exhaustive;
    double worst_ratio = 0;
    std::vector<std::size_t> worst_set;
    std::uint64_t subsets_checked = 0;
    bool verdict = false;
    bool certified = false;
    std::string note;
};

/// min |Gamma(X)| / |X| over nonempty input sets with |X| <= alpha n_in;
/// verdict is worst_ratio >= c. With stop_on_refutation the exhaustive scan
/// ends at the first violating set, which is then reported instead of the minimum.
ConcentrationReport bsc_check(const BipartiteGraph& x, double alpha, double c, CheckMode mode = CheckMode::exhaustive,
                              const SampleOptions& sample = {}, bool stop_on_refutation = false);

/// min |N(X) - X| / |X| over nonempty X with |X| <= n/2: the largest magnifier
/// constant of the graph. verdict is worst_ratio >= c.
ConcentrationReport magnifier_constant(const Graph& g, CheckMode mode = CheckMode::exhaustive,
                                       const SampleOptions& sample = {}, double c = 0);

/// Checks |N(A)| >= (1 + c (1 - |A|/n)) |A| over nonempty input sets, only those
/// with |A| <= n/2 when restrict_half is set. worst_ratio is the minimum of
/// |N(A)| / ((1 + c (1 - |A|/n)) |A|), so the inequality holds iff it is >= 1.
ConcentrationReport expander_check(const BipartiteGraph& x, double c, bool restrict_half = true,
                                   CheckMode mode = CheckMode::exhaustive, const SampleOptions& sample = {});

struct DoubleCoverReport {
    double magnifier = 0;
    ConcentrationReport magnifier_report;
    ConcentrationReport expander_report;
    bool pass = false;
};

/// Measures the magnifier constant c of a simple graph, builds its extended
/// double cover and checks that the cover is a half-restricted expander with
/// the same c.
DoubleCoverReport double_cover_transfer(const Graph& g);

}  // namespace bsc
