#include "bsc/designs.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bsc/spectral.hpp"

namespace bsc {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

// Colex rank of a sorted subset.
std::uint64_t colex_rank(std::span<const Point> subset) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) r += binomial(subset[i], i + 1);
    return r;
}

PointSet colex_unrank(std::uint64_t rank, std::size_t t, std::size_t v) {
    PointSet out(t);
    std::uint64_t c = v;
    for (std::size_t i = t; i-- > 0;) {
        while (binomial(c, i + 1) > rank) --c;
        out[i] = static_cast<Point>(c);
        rank -= binomial(c, i + 1);
    }
    return out;
}

void check_blocks(const Design& d) {
    if (d.blocks.empty()) throw std::invalid_argument("design has no blocks");
    const auto k = d.block_size();
    for (const auto& b : d.blocks) {
        if (b.size() != k) throw std::invalid_argument("design blocks differ in size");
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] >= d.v) throw std::invalid_argument("design block point out of range");
            if (i > 0 && b[i] <= b[i - 1]) throw std::invalid_argument("design block is not a sorted set");
        }
    }
}

}  // namespace

DesignValidation validate_design(const Design& d, std::size_t t, std::uint64_t gamma, std::uint64_t cap) {
    check_blocks(d);
    const auto k = d.block_size();
    if (!(t <= k && k < d.v)) throw std::invalid_argument("validate_design: need t <= k < v");
    const auto total = binomial(d.v, t);
    if (total > cap)
        throw std::length_error("validate_design: " + std::to_string(total) + " t-subsets exceed the cap");

    std::vector<std::uint32_t> counts(total, 0);
    std::vector<std::size_t> pick(t);
    PointSet sub(t);
    for (const auto& block : d.blocks) {
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        for (;;) {
            for (std::size_t i = 0; i < t; ++i) sub[i] = block[pick[i]];
            ++counts[colex_rank(sub)];
            std::size_t i = t;
            while (i > 0 && pick[i - 1] == k - t + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < t; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    DesignValidation out;
    out.subsets_checked = total;
    out.ok = true;
    for (std::uint64_t r = 0; r < total; ++r) {
        if (counts[r] != gamma) {
            out.ok = false;
            out.witness = colex_unrank(r, t, d.v);
            out.witness_count = counts[r];
            break;
        }
    }
    return out;
}

DerivedParams derived_params(std::size_t t, std::uint64_t v, std::uint64_t k, std::uint64_t gamma,
                             std::size_t s) {
    if (s > t) throw std::invalid_argument("derived_params: s must not exceed t");
    if (!(t <= k && k < v)) throw std::invalid_argument("derived_params: need t <= k < v");

    DerivedParams out;
    out.exists = true;
    out.gammas.assign(t + 1, 0);
    for (std::size_t i = 0; i <= t; ++i) {
        unsigned __int128 num = gamma, den = 1;
        for (std::size_t j = i; j < t; ++j) {
            num *= v - j;
            den *= k - j;
        }
        if (num % den != 0) {
            out.exists = false;
            continue;
        }
        out.gammas[i] = static_cast<std::uint64_t>(num / den);
    }
    if (!out.exists) return out;
    out.gamma_s = out.gammas[s];
    if (t >= 2) out.bibd = BibdParams{v, out.gammas[0], out.gammas[1], k, out.gammas[2]};
    return out;
}

BibdParams bibd_params(const Design& d) {
    check_blocks(d);
    BibdParams p{d.v, d.blocks.size(), 0, d.block_size(), 0};
    for (const auto& b : d.blocks) {
        const bool has0 = std::binary_search(b.begin(), b.end(), Point{0});
        const bool has1 = std::binary_search(b.begin(), b.end(), Point{1});
        p.r += has0;
        p.lambda += has0 && has1;
    }
    return p;
}

Design contraction(const Design& d, std::optional<Point> p) {
    check_blocks(d);
    const Point at = p.value_or(static_cast<Point>(d.v - 1));
    if (at >= d.v) throw std::invalid_argument("contraction: point out of range");
    if (d.v < 2) throw std::invalid_argument("contraction: design too small");

    Design out;
    out.v = d.v - 1;
    out.t = d.t > 0 ? d.t - 1 : 0;
    out.gamma = d.gamma;
    for (const auto& b : d.blocks) {
        if (!std::binary_search(b.begin(), b.end(), at)) continue;
        PointSet nb;
        for (Point x : b)
            if (x != at) nb.push_back(x > at ? x - 1 : x);
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

std::array<std::uint32_t, 12> golay_generator_rows() {
    // B is the right half of the row-reduced span of the 23 cyclic shifts of the
    // indicator of the nonzero squares mod 23, each extended by a parity bit.
    static constexpr std::array<const char*, 12> kB = {
        "110001110101", "011000111011", "111101101000", "011110110100",
        "001111011010", "110110011001", "011011001101", "001101100111",
        "110111000110", "101010010111", "100100111110", "100011101011",
    };
    std::array<std::uint32_t, 12> rows{};
    for (std::size_t i = 0; i < 12; ++i) {
        std::uint32_t w = 1u << i;
        for (std::size_t j = 0; j < 12; ++j)
            if (kB[i][j] == '1') w |= 1u << (12 + j);
        rows[i] = w;
    }
    return rows;
}

GolayCode golay_code() {
    const auto rows = golay_generator_rows();
    GolayCode code;
    code.codewords.resize(4096);
    for (std::uint32_t m = 0; m < 4096; ++m) {
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < 12; ++i)
            if (m >> i & 1u) w ^= rows[i];
        code.codewords[m] = w;
        ++code.weight_distribution[std::popcount(w)];
    }
    return code;
}

Design golay_witt_design() {
    const auto code = golay_code();
    const std::array<std::uint64_t, 25> expected = [] {
        std::array<std::uint64_t, 25> e{};
        e[0] = 1;
        e[8] = 759;
        e[12] = 2576;
        e[16] = 759;
        e[24] = 1;
        return e;
    }();
    if (code.weight_distribution != expected)
        throw std::logic_error("golay_witt_design: weight distribution mismatch");

    Design d;
    d.v = 24;
    d.t = 5;
    d.gamma = 1;
    for (auto w : code.codewords) {
        if (std::popcount(w) != 8) continue;
        PointSet b;
        for (Point j = 0; j < 24; ++j)
            if (w >> j & 1u) b.push_back(j);
        d.blocks.push_back(std::move(b));
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

std::vector<Permutation> witt24_automorphisms() {
    // Coordinates 0..22 are the integers mod 23 and 23 is infinity:
    // x -> x + 1, x -> -1/x, and x -> 9x^3 on nonzero squares, x^3/9 on non-squares.
    return {
        Permutation({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 0, 23}),
        Permutation({23, 22, 11, 15, 17, 9, 19, 13, 20, 5, 16, 2, 21, 7, 18, 3, 10, 4, 14, 6, 8, 12, 1, 0}),
        Permutation({0, 9, 3, 13, 1, 19, 12, 10, 8, 6, 14, 15, 4, 16, 11, 7, 18, 22, 2, 21, 20, 17, 5, 23}),
    };
}

MathieuChain mathieu12_designs() {
    auto gens = groups::mathieu12_generators();
    MathieuChain chain{closure(12, gens), {}, {}, {}, {}};
    if (chain.m12.order() != 95040) throw std::logic_error("mathieu12_designs: M12 closure has wrong order");

    auto blocks = orbit(chain.m12.generators(), PointSet{0, 1, 2, 9, 10, 11});
    if (blocks.size() != 132) throw std::logic_error("mathieu12_designs: orbit of the base block is not 132");
    std::sort(blocks.begin(), blocks.end());
    chain.d12 = Design{12, std::move(blocks), 5, 1};
    chain.d11 = contraction(chain.d12);
    chain.d10 = contraction(chain.d11);
    chain.d9 = contraction(chain.d10);
    return chain;
}

BipartiteGraph design_bipartite(const Design& d, bool blocks_as_inputs) {
    check_blocks(d);
    BipartiteGraph x{Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(d.v),
                                           static_cast<Eigen::Index>(d.blocks.size()))};
    for (std::size_t j = 0; j < d.blocks.size(); ++j)
        for (Point p : d.blocks[j]) x.inc(p, j) = 1;
    return blocks_as_inputs ? x.transposed() : x;
}

BibdSpectrum bibd_spectrum_check(const Design& d, double tol) {
    BibdSpectrum out;
    out.params = bibd_params(d);
    const auto& p = out.params;
    const auto x = design_bipartite(d);
    out.eigenvalues = jacobi_eigen(gram(x)).values;
    out.expected_top = static_cast<double>(p.r * p.k);
    out.expected_rest = static_cast<double>(p.r) - static_cast<double>(p.lambda);

    double err = std::abs(out.eigenvalues(0) - out.expected_top);
    for (Eigen::Index i = 1; i < out.eigenvalues.size(); ++i)
        err = std::max(err, std::abs(out.eigenvalues(i) - out.expected_rest));
    out.max_relative_error = err / out.expected_top;
    out.mu1 = out.eigenvalues.size() > 1 ? std::sqrt(std::max(0.0, out.eigenvalues(1))) : 0.0;
    out.ramanujan = ramanujan_check(static_cast<double>(p.r), static_cast<double>(p.k), out.mu1);
    out.ok = out.max_relative_error <= tol;
    return out;
}

Permutation induced_block_action(const Design& d, const Permutation& g) {
    if (g.degree() != d.v) throw std::invalid_argument("induced_block_action: degree mismatch");
    std::map<PointSet, Point> where;
    for (std::size_t j = 0; j < d.blocks.size(); ++j) where.emplace(d.blocks[j], static_cast<Point>(j));
    std::vector<Point> im(d.blocks.size());
    for (std::size_t j = 0; j < d.blocks.size(); ++j) {
        auto it = where.find(bsc::apply(g, d.blocks[j]));
        if (it == where.end()) throw std::invalid_argument("induced_block_action: not an automorphism");
        im[j] = it->second;
    }
    return Permutation(std::move(im));
}

TransitivityReport semi_transitivity_check(const BipartiteGraph& x,
                                           std::span<const std::pair<Permutation, Permutation>> actions) {
    TransitivityReport out;
    std::vector<Permutation> ins, outs;
    out.preserves_incidence = true;
    for (const auto& [pi, sigma] : actions) {
        if (pi.degree() != static_cast<std::size_t>(x.n_in()) || sigma.degree() != static_cast<std::size_t>(x.n_out()))
            throw std::invalid_argument("semi_transitivity_check: permutation degree mismatch");
        for (Eigen::Index i = 0; i < x.n_in() && out.preserves_incidence; ++i)
            for (Eigen::Index j = 0; j < x.n_out(); ++j)
                if (x.inc(i, j) != x.inc(pi[i], sigma[j])) {
                    out.preserves_incidence = false;
                    break;
                }
        ins.push_back(pi);
        outs.push_back(sigma);
    }
    out.input_orbit = x.n_in() > 0 ? point_orbit(ins, 0, x.n_in()).size() : 0;
    out.output_orbit = x.n_out() > 0 ? point_orbit(outs, 0, x.n_out()).size() : 0;
    out.semi_transitive = out.preserves_incidence && out.input_orbit == static_cast<std::size_t>(x.n_in()) &&
                          out.output_orbit == static_cast<std::size_t>(x.n_out());
    return out;
}

}  // namespace bsc
