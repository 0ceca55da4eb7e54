#include "bsc/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bsc/rng.hpp"

namespace bsc {

namespace {

constexpr double kRatioTol = 1e-12;

// |Gamma(X)|: outputs adjacent to the selected inputs.
class NeighborCounter {
public:
    explicit NeighborCounter(const BipartiteGraph& x) : nb_(x.n_in()), hits_(x.n_out(), 0) {
        for (Eigen::Index i = 0; i < x.n_in(); ++i)
            for (Eigen::Index j = 0; j < x.n_out(); ++j)
                if (x.inc(i, j) > 0) nb_[i].push_back(j);
    }
    void add(std::size_t u) {
        for (auto w : nb_[u]) covered_ += hits_[w]++ == 0;
    }
    void remove(std::size_t u) {
        for (auto w : nb_[u]) covered_ -= --hits_[w] == 0;
    }
    std::size_t count() const { return covered_; }

private:
    std::vector<std::vector<std::size_t>> nb_;
    std::vector<std::size_t> hits_;
    std::size_t covered_ = 0;
};

// |N(X) - X| in a graph, loops ignored.
class BoundaryCounter {
public:
    explicit BoundaryCounter(const Graph& g) : nb_(g.n()), hits_(g.n(), 0), in_(g.n(), false) {
        for (Eigen::Index i = 0; i < g.n(); ++i)
            for (Eigen::Index j = 0; j < g.n(); ++j)
                if (i != j && g.adj(i, j) > 0) nb_[i].push_back(j);
    }
    void add(std::size_t u) {
        if (hits_[u] > 0) --outside_;
        in_[u] = true;
        for (auto w : nb_[u])
            if (hits_[w]++ == 0 && !in_[w]) ++outside_;
    }
    void remove(std::size_t u) {
        in_[u] = false;
        for (auto w : nb_[u])
            if (--hits_[w] == 0 && !in_[w]) --outside_;
        if (hits_[u] > 0) ++outside_;
    }
    std::size_t count() const { return outside_; }

private:
    std::vector<std::vector<std::size_t>> nb_;
    std::vector<std::size_t> hits_;
    std::vector<bool> in_;
    std::size_t outside_ = 0;
};

// Lexicographic order of the sorted element lists of two bitmasks.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    const int p = std::countr_zero(a ^ b);
    const auto above = [p](std::uint32_t m) { return p >= 31 ? 0u : m >> (p + 1); };
    if (a >> p & 1u) return above(b) != 0;
    return above(a) == 0;
}

std::vector<std::size_t> mask_members(std::uint32_t m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; m != 0; ++i, m >>= 1)
        if (m & 1u) out.push_back(i);
    return out;
}

template <typename Counter, typename Score>
ConcentrationReport scan(Counter& counter, std::size_t n, std::size_t max_size, CheckMode mode,
                         const SampleOptions& sample, Score score, double threshold, bool stop_on_refutation) {
    ConcentrationReport rep;
    rep.mode = mode;
    rep.worst_ratio = std::numeric_limits<double>::infinity();
    max_size = std::min(max_size, n);

    if (mode == CheckMode::exhaustive) {
        if (n > kExhaustiveCap)
            throw std::length_error("exhaustive check limited to " + std::to_string(kExhaustiveCap) + " vertices");
        std::uint32_t mask = 0, best_mask = 0;
        std::size_t size = 0;
        bool found = false;
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t i = 1; i < limit; ++i) {
            const int bit = std::countr_zero(i);
            if (mask >> bit & 1u) {
                counter.remove(bit);
                --size;
            } else {
                counter.add(bit);
                ++size;
            }
            mask ^= 1u << bit;
            if (size == 0 || size > max_size) continue;
            ++rep.subsets_checked;
            const double r = score(size, counter.count());
            if (!found || r < rep.worst_ratio || (r == rep.worst_ratio && mask_lex_less(mask, best_mask))) {
                found = true;
                rep.worst_ratio = r;
                best_mask = mask;
            }
            if (stop_on_refutation && r < threshold - kRatioTol) break;
        }
        if (found) rep.worst_set = mask_members(best_mask);
        rep.certified = true;
    } else {
        Rng rng(sample.seed);
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (std::size_t s = 1; s <= max_size; ++s) {
            for (std::uint64_t b = 0; b < sample.budget; ++b) {
                for (std::size_t j = 0; j < s; ++j) std::swap(idx[j], idx[j + rng.below(n - j)]);
                std::vector<std::size_t> set(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(s));
                std::sort(set.begin(), set.end());
                for (auto u : set) counter.add(u);
                const double r = score(s, counter.count());
                for (auto u : set) counter.remove(u);
                ++rep.subsets_checked;
                if (rep.worst_set.empty() || r < rep.worst_ratio || (r == rep.worst_ratio && set < rep.worst_set)) {
                    rep.worst_ratio = r;
                    rep.worst_set = std::move(set);
                }
            }
        }
        rep.certified = false;
    }

    rep.verdict = rep.worst_ratio >= threshold - kRatioTol;
    if (rep.subsets_checked == 0) {
        rep.note = "no eligible subsets";
    } else if (mode == CheckMode::sampled) {
        rep.note = rep.verdict ? "not refuted by " + std::to_string(rep.subsets_checked) +
                                     " sampled subsets; at 95% confidence fewer than a fraction " +
                                     std::to_string(3.0 / static_cast<double>(sample.budget)) +
                                     " of the subsets of each size violate the bound; not a certificate"
                               : "refuted by the reported witness set";
    }
    return rep;
}

std::size_t eligible_size(double fraction, std::size_t n) {
    return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + 1e-9));
}

}  // namespace

ConcentrationReport bsc_check(const BipartiteGraph& x, double alpha, double c, CheckMode mode,
                              const SampleOptions& sample, bool stop_on_refutation) {
    if (!(alpha > 0 && alpha <= 1)) throw std::invalid_argument("bsc_check: alpha must lie in (0, 1]");
    NeighborCounter counter(x);
    const auto n = static_cast<std::size_t>(x.n_in());
    return scan(counter, n, eligible_size(alpha, n), mode, sample,
                [](std::size_t size, std::size_t count) { return static_cast<double>(count) / static_cast<double>(size); },
                c, stop_on_refutation);
}

ConcentrationReport magnifier_constant(const Graph& g, CheckMode mode, const SampleOptions& sample, double c) {
    if (g.n() < 2) throw std::invalid_argument("magnifier_constant: need at least two vertices");
    BoundaryCounter counter(g);
    const auto n = static_cast<std::size_t>(g.n());
    return scan(counter, n, n / 2, mode, sample,
                [](std::size_t size, std::size_t count) { return static_cast<double>(count) / static_cast<double>(size); },
                c, false);
}

ConcentrationReport expander_check(const BipartiteGraph& x, double c, bool restrict_half, CheckMode mode,
                                   const SampleOptions& sample) {
    if (x.n_in() != x.n_out()) throw std::invalid_argument("expander_check: sides differ in size");
    if (c < 0) throw std::invalid_argument("expander_check: c must be non-negative");
    NeighborCounter counter(x);
    const auto n = static_cast<std::size_t>(x.n_in());
    const double nd = static_cast<double>(n);
    return scan(counter, n, restrict_half ? n / 2 : n, mode, sample,
                [c, nd](std::size_t size, std::size_t count) {
                    const double s = static_cast<double>(size);
                    return static_cast<double>(count) / ((1 + c * (1 - s / nd)) * s);
                },
                1.0, false);
}

DoubleCoverReport double_cover_transfer(const Graph& g) {
    DoubleCoverReport out;
    out.magnifier_report = magnifier_constant(g);
    out.magnifier = out.magnifier_report.worst_ratio;
    out.expander_report = expander_check(extended_double_cover(g), out.magnifier, true);
    out.pass = out.expander_report.verdict;
    return out;
}

}  // namespace bsc
