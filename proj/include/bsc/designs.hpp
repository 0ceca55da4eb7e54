#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bsc/graphs.hpp"
#include "bsc/permgroup.hpp"

namespace bsc {

/// Points {0, ..., v-1} with a list of equal-size blocks. t and gamma record the
/// claimed t-(v, k, gamma) parameters; validate_design checks them.
struct Design {
    std::size_t v = 0;
    std::vector<PointSet> blocks;
    std::size_t t = 0;
    std::uint64_t gamma = 0;

    std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
    bool operator==(const Design&) const = default;
};

struct BibdParams {
    std::uint64_t v = 0, b = 0, r = 0, k = 0, lambda = 0;

    /// b k = v r and r (k - 1) = lambda (v - 1).
    bool identities_hold() const { return b * k == v * r && r * (k - 1) == lambda * (v - 1); }
    bool operator==(const BibdParams&) const = default;
};

inline constexpr std::uint64_t kDefaultSubsetCap = 10'000'000;

struct DesignValidation {
    bool ok = false;
    std::uint64_t subsets_checked = 0;
    std::optional<PointSet> witness;  // first t-subset (colex order) whose count differs
    std::uint64_t witness_count = 0;
};

/// Counts, for every t-subset of points, the blocks that contain it.
DesignValidation validate_design(const Design& d, std::size_t t, std::uint64_t gamma,
                                 std::uint64_t cap = kDefaultSubsetCap);

struct DerivedParams {
    bool exists = false;           // false when some gamma_i is not an integer
    std::uint64_t gamma_s = 0;
    std::vector<std::uint64_t> gammas;  // gamma_0 ... gamma_t where integral
    std::optional<BibdParams> bibd;     // (v, gamma_0, gamma_1, k, gamma_2) for t >= 2
};

/// gamma_s = gamma (v-s)...(v-t+1) / ((k-s)...(k-t+1)), the number of blocks
/// through any s points of a t-(v, k, gamma) design.
DerivedParams derived_params(std::size_t t, std::uint64_t v, std::uint64_t k, std::uint64_t gamma, std::size_t s);

/// BIBD parameters read off the blocks (r at point 0, lambda at {0, 1}).
BibdParams bibd_params(const Design& d);

/// Blocks through p with p deleted, relabelled onto {0, ..., v-2}. Defaults to
/// the largest point.
Design contraction(const Design& d, std::optional<Point> p = std::nullopt);

/// Rows of the systematic generator matrix (I | B) of the extended binary Golay
/// code, one 24-bit word per row, bit j = coordinate j.
std::array<std::uint32_t, 12> golay_generator_rows();

struct GolayCode {
    std::vector<std::uint32_t> codewords;  // all 4096, indexed by message bits
    std::array<std::uint64_t, 25> weight_distribution{};
};

GolayCode golay_code();

/// The 5-(24, 8, 1) design formed by the supports of the 759 weight-8 codewords.
Design golay_witt_design();

/// Three automorphisms of the Witt design that generate M24 on the coordinates.
std::vector<Permutation> witt24_automorphisms();

struct MathieuChain {
    FiniteGroup m12;
    Design d12, d11, d10, d9;
};

/// D12 is the orbit of {0, 1, 2, 9, 10, 11} under M12; D11, D10, D9 follow by
/// contraction at the largest point.
MathieuChain mathieu12_designs();

/// Points as inputs and blocks as outputs; blocks_as_inputs swaps the sides.
BipartiteGraph design_bipartite(const Design& d, bool blocks_as_inputs = false);

struct BibdSpectrum {
    BibdParams params;
    Eigen::VectorXd eigenvalues;  // of A A^T, descending
    double expected_top = 0;      // r k
    double expected_rest = 0;     // r - lambda
    double max_relative_error = 0;
    double mu1 = 0;               // second-largest adjacency eigenvalue of the bipartite graph
    bool ramanujan = false;
    bool ok = false;
};

/// Eigensolves A A^T and compares against {r k, r - lambda (v - 1 times)}.
BibdSpectrum bibd_spectrum_check(const Design& d, double tol = 1e-8);

/// The permutation of block indices induced by a point permutation; throws if
/// the permutation is not an automorphism.
Permutation induced_block_action(const Design& d, const Permutation& g);

struct TransitivityReport {
    bool preserves_incidence = false;
    std::size_t input_orbit = 0;   // orbit size of input 0
    std::size_t output_orbit = 0;  // orbit size of output 0
    bool semi_transitive = false;
};

/// Each action is a pair (permutation of inputs, permutation of outputs).
TransitivityReport semi_transitivity_check(const BipartiteGraph& x,
                                           std::span<const std::pair<Permutation, Permutation>> actions);

/// n choose k as an exact integer; throws on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace bsc
