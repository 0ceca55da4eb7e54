#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string_view>
#include <vector>

#include "bsc/permgroup.hpp"

namespace bsc {

/// Complex character table of a finite group, irreducibles by rows.
struct CharacterTable {
    std::size_t group_order = 0;
    std::vector<std::vector<std::size_t>> classes;  // element indices, ordered by least member
    std::vector<std::size_t> class_of;              // element index -> class
    std::vector<std::size_t> class_sizes;
    std::vector<int> degrees;                       // ascending; the trivial character comes first
    Eigen::MatrixXcd chars;                         // irreducible x class
    double orthogonality_residual = 0;              // worst row/column relation error

    std::size_t size() const { return degrees.size(); }
};

inline constexpr std::size_t kMaxClasses = 60;

/// Burnside's method: the class-sum structure constants give commuting matrices
/// whose common eigenvectors are the central characters. A random real
/// combination separates them; up to 8 combinations are tried. Degrees are
/// recovered from the orthogonality relations and rounded, and sum d^2 = |G|
/// is required exactly.
CharacterTable character_table(const FiniteGroup& group, double tol = 1e-8, std::uint64_t seed = 0x5EED);

/// Sum of the irreducible degrees.
std::uint64_t dim_sum(const CharacterTable& table);

struct RelativeDimSum {
    /// Degrees summed over irreducibles whose restriction to H has no trivial
    /// constituent.
    std::uint64_t without_trivial = 0;
    /// Degrees summed over non-trivial irreducibles whose restriction to H does
    /// contain the trivial character.
    std::uint64_t support = 0;
    std::vector<int> trivial_multiplicity;  // per irreducible, <chi|_H, 1_H>
};

RelativeDimSum dim_sum_relative(const FiniteGroup& group, const CharacterTable& table, const FiniteGroup& sub,
                                double tol = 1e-8);

/// x log(x/p) + (1-x) log((1-x)/(1-p)) in natural logarithms, with 0 log 0 = 0.
double entropy_hp(double p, double x);

enum class BoundVariant { cayley, coset, bicoset };

BoundVariant parse_bound_variant(std::string_view name);  // "thm14" | "thm15" | "thm18"
std::string_view variant_name(BoundVariant v);

struct BoundInputs {
    double dim_sum = 0;
    std::uint64_t k = 0;
    double eps = 0;
    BoundVariant variant = BoundVariant::cayley;
};

struct BoundResult {
    double threshold = 0;  // the event is mu* > threshold
    double probability_bound = 0;
    bool vacuous = false;  // bound >= 1
};

/// cayley/coset: 2D exp(-k H_1/2((1+eps)/2)) at threshold eps.
/// bicoset: 2D exp(-(k^2-k) H_1/2(1/2+eps)) at threshold eps + (1-eps)/(2k);
/// this needs eps <= 1/2 for the entropy argument to lie in [0, 1].
BoundResult bound_eval(const BoundInputs& in);

}  // namespace bsc
