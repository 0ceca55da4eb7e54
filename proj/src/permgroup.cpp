#include "bsc/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "bsc/rng.hpp"

namespace bsc {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
        if (x >= images_.size() || seen[x])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t degree) {
    std::vector<Point> im(degree);
    for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(i);
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
    std::vector<Point> im(degree);
    for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(i);
    std::vector<bool> moved(degree, false);

    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("cycle notation: expected '('");
        ++pos;
        std::vector<Point> cycle;
        for (;;) {
            skip_space();
            if (pos >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            if (end == pos) throw std::invalid_argument("cycle notation: expected a point");
            const auto value = std::stoul(std::string(text.substr(pos, end - pos)));
            if (value >= degree) throw std::invalid_argument("cycle notation: point out of range");
            cycle.push_back(static_cast<Point>(value));
            pos = end;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const Point from = cycle[i];
            if (moved[from]) throw std::invalid_argument("cycle notation: point repeated");
            moved[from] = true;
            im[from] = cycle[(i + 1) % cycle.size()];
        }
        skip_space();
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<Point> im(p.degree());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = p[q[i]];
    return Permutation(std::move(im));
}

PointSet apply(const Permutation& p, const PointSet& set) {
    PointSet out;
    out.reserve(set.size());
    for (Point x : set) {
        if (x >= p.degree()) throw std::invalid_argument("apply: point out of range");
        out.push_back(p[x]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Point x : p.images()) {
        h ^= x;
        h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
    return index_.at(compose(elements_[a], elements_[b]));
}

std::size_t FiniteGroup::inverse(std::size_t a) const { return index_.at(elements_[a].inverse()); }

bool FiniteGroup::is_subgroup_of(const FiniteGroup& parent) const {
    if (degree_ != parent.degree_) return false;
    if (parent.order() % order() != 0) return false;
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](const Permutation& p) { return parent.contains(p); });
}

FiniteGroup closure(std::size_t degree, std::vector<Permutation> generators, std::size_t cap) {
    for (const auto& g : generators)
        if (g.degree() != degree) throw std::invalid_argument("closure: generator degree mismatch");

    FiniteGroup group;
    group.degree_ = degree;
    group.generators_ = std::move(generators);

    auto insert = [&](Permutation p) {
        if (group.index_.contains(p)) return;
        if (group.elements_.size() >= cap)
            throw std::length_error("closure: group exceeds the enumeration cap of " +
                                    std::to_string(cap) + " elements");
        group.index_.emplace(p, group.elements_.size());
        group.elements_.push_back(std::move(p));
    };

    insert(Permutation::identity(degree));
    for (std::size_t head = 0; head < group.elements_.size(); ++head) {
        for (const auto& g : group.generators_) insert(compose(g, group.elements_[head]));
    }
    return group;
}

CosetPartition right_cosets(const FiniteGroup& group, const FiniteGroup& sub) {
    if (!sub.is_subgroup_of(group)) throw std::invalid_argument("right_cosets: not a subgroup");

    CosetPartition part;
    part.subgroup_order = sub.order();
    constexpr auto unset = static_cast<std::size_t>(-1);
    part.coset_of.assign(group.order(), unset);
    for (std::size_t x = 0; x < group.order(); ++x) {
        if (part.coset_of[x] != unset) continue;
        const std::size_t c = part.representatives.size();
        part.representatives.push_back(x);
        for (const auto& h : sub.elements()) part.coset_of[*group.index_of(compose(h, group.element(x)))] = c;
    }
    return part;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& group) {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> done(group.order(), false);
    std::vector<Permutation> gen_inv;
    for (const auto& g : group.generators()) gen_inv.push_back(g.inverse());

    for (std::size_t x = 0; x < group.order(); ++x) {
        if (done[x]) continue;
        std::vector<std::size_t> cls{x};
        done[x] = true;
        for (std::size_t head = 0; head < cls.size(); ++head) {
            const auto& y = group.element(cls[head]);
            for (std::size_t i = 0; i < gen_inv.size(); ++i) {
                const auto z = *group.index_of(compose(group.generators()[i], compose(y, gen_inv[i])));
                if (!done[z]) {
                    done[z] = true;
                    cls.push_back(z);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<PointSet> orbit(std::span<const Permutation> generators, const PointSet& seed) {
    std::set<PointSet> seen{seed};
    std::vector<PointSet> out{seed};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& g : generators) {
            PointSet next = bsc::apply(g, out[head]);
            if (seen.insert(next).second) out.push_back(std::move(next));
        }
    }
    return out;
}

PointSet point_orbit(std::span<const Permutation> generators, Point seed, std::size_t degree) {
    std::vector<bool> seen(degree, false);
    PointSet out{seed};
    seen[seed] = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& g : generators) {
            const Point y = g[out[head]];
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> sample_multiset(const FiniteGroup& group, std::size_t k, std::uint64_t seed) {
    if (group.order() == 0) throw std::invalid_argument("sample_multiset: empty group");
    if (k == 0) throw std::invalid_argument("sample_multiset: k must be positive");
    Rng rng(seed);
    std::vector<std::size_t> out(k);
    for (auto& x : out) x = rng.below(group.order());
    return out;
}

namespace groups {

FiniteGroup symmetric(std::size_t n) {
    if (n <= 1) return trivial(n);
    std::vector<Permutation> gens;
    std::vector<Point> swap(n), cycle(n);
    for (std::size_t i = 0; i < n; ++i) {
        swap[i] = static_cast<Point>(i);
        cycle[i] = static_cast<Point>((i + 1) % n);
    }
    std::swap(swap[0], swap[1]);
    gens.emplace_back(swap);
    if (n > 2) gens.emplace_back(cycle);
    return closure(n, std::move(gens));
}

FiniteGroup alternating(std::size_t n) {
    if (n <= 2) return trivial(n);
    std::vector<Permutation> gens;
    for (std::size_t i = 2; i < n; ++i) {
        std::vector<Point> im(n);
        for (std::size_t j = 0; j < n; ++j) im[j] = static_cast<Point>(j);
        im[0] = 1;
        im[1] = static_cast<Point>(i);
        im[i] = 0;
        gens.emplace_back(im);
    }
    return closure(n, std::move(gens));
}

FiniteGroup cyclic(std::size_t n) {
    std::vector<Point> im(n);
    for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<Point>((i + 1) % n);
    return closure(n, {Permutation(im)});
}

FiniteGroup trivial(std::size_t degree) { return closure(degree, {}); }

std::vector<Permutation> mathieu12_generators() {
    return {
        Permutation::from_cycles(12, "(0 1 2)(3 4 5)(6 7 8)"),
        Permutation::from_cycles(12, "(1 3 2 6)(4 5 8 7)"),
        Permutation::from_cycles(12, "(1 4 2 8)(3 7 6 5)"),
        Permutation::from_cycles(12, "(0 9)(3 4)(5 7)(6 8)"),
        Permutation::from_cycles(12, "(9 10)(3 6)(4 7)(5 8)"),
        Permutation::from_cycles(12, "(10 11)(3 8)(4 6)(5 7)"),
    };
}

}  // namespace groups

}  // namespace bsc
