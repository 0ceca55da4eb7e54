#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bsc {

using Point = std::uint32_t;
using PointSet = std::vector<Point>;  // sorted, duplicate free

/// A bijection of {0, ..., n-1} stored as its image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(std::size_t degree);
    /// Parses cycle notation such as "(0 1)(2 3 4)"; "()" is the identity.
    static Permutation from_cycles(std::size_t degree, std::string_view cycles);

    std::size_t degree() const { return images_.size(); }
    Point operator[](std::size_t i) const { return images_[i]; }
    std::span<const Point> images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<Point> images_;
};

/// (p * q)[i] = p[q[i]]: q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

PointSet apply(const Permutation& p, const PointSet& set);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// A permutation group with every element enumerated.
///
/// Elements are listed in breadth-first order from the identity, multiplying
/// on the left by the generators in the order given. Index 0 is the identity.
class FiniteGroup {
public:
    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(std::size_t i) const { return elements_[i]; }

    std::optional<std::size_t> index_of(const Permutation& p) const;
    bool contains(const Permutation& p) const { return index_of(p).has_value(); }

    /// Index of elements_[a] * elements_[b].
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;

    bool is_subgroup_of(const FiniteGroup& parent) const;

    friend FiniteGroup closure(std::size_t, std::vector<Permutation>, std::size_t);

private:
    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Breadth-first closure of the generators. Throws std::length_error when the
/// group would exceed `cap` elements.
FiniteGroup closure(std::size_t degree, std::vector<Permutation> generators,
                    std::size_t cap = kDefaultGroupCap);

struct CosetPartition {
    std::vector<std::size_t> representatives;  // element index, least in its coset
    std::vector<std::size_t> coset_of;         // element index -> coset index
    std::size_t subgroup_order = 0;

    std::size_t count() const { return representatives.size(); }
};

/// Right cosets Hg of `sub` in `group`, ordered by least member.
CosetPartition right_cosets(const FiniteGroup& group, const FiniteGroup& sub);

/// Conjugacy classes as sorted element-index lists, ordered by least member.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& group);

/// Orbit of a point set under the group generated by `generators`, in BFS order.
std::vector<PointSet> orbit(std::span<const Permutation> generators, const PointSet& seed);

/// Orbit of a single point.
PointSet point_orbit(std::span<const Permutation> generators, Point seed, std::size_t degree);

/// k independent uniform draws (with replacement), as element indices.
std::vector<std::size_t> sample_multiset(const FiniteGroup& group, std::size_t k, std::uint64_t seed);

namespace groups {

FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
/// Z_n acting regularly on n points, generated by the n-cycle i -> i+1.
FiniteGroup cyclic(std::size_t n);
/// The trivial subgroup on `degree` points.
FiniteGroup trivial(std::size_t degree);

/// Six generators of M12 on 12 points (0-based), in the order mu, a, b, x, y, z.
/// mu, a, b generate the affine group 3^2:Q8 on the first nine points.
std::vector<Permutation> mathieu12_generators();

}  // namespace groups

}  // namespace bsc
