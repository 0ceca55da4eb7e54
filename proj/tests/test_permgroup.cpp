#include <doctest.h>

#include <set>

#include "bsc/permgroup.hpp"
#include "oracles.hpp"

using namespace bsc;

TEST_CASE("composition applies the right factor first") {
    const auto p = Permutation::from_cycles(3, "(0 1)");
    const auto q = Permutation::from_cycles(3, "(1 2)");
    const auto pq = compose(p, q);
    for (std::size_t i = 0; i < 3; ++i) CHECK(pq[i] == p[q[i]]);
    CHECK(pq == p * q);
    CHECK(pq != q * p);
    CHECK((p * p.inverse()).is_identity());
}

TEST_CASE("permutation parsing and validation") {
    CHECK(Permutation::from_cycles(4, "()").is_identity());
    const auto c = Permutation::from_cycles(5, "(0 1 2)(3 4)");
    CHECK(c[0] == 1);
    CHECK(c[2] == 0);
    CHECK(c[3] == 4);
    CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 0)"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 5)"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
    CHECK(bsc::apply(c, PointSet{0, 3}) == PointSet{1, 4});
}

TEST_CASE("standard group orders") {
    CHECK(groups::symmetric(4).order() == 24);
    CHECK(groups::symmetric(5).order() == 120);
    CHECK(groups::alternating(4).order() == 12);
    CHECK(groups::alternating(5).order() == 60);
    CHECK(groups::cyclic(5).order() == 5);
    CHECK(groups::trivial(3).order() == 1);
    CHECK(groups::alternating(4).is_subgroup_of(groups::symmetric(4)));
    CHECK_FALSE(groups::symmetric(4).is_subgroup_of(groups::alternating(4)));
}

TEST_CASE("closure is consistent with composition") {
    const auto g = groups::symmetric(4);
    CHECK(g.element(0).is_identity());
    for (std::size_t a = 0; a < g.order(); a += 5) {
        for (std::size_t b = 0; b < g.order(); b += 3) {
            CHECK(g.element(g.multiply(a, b)) == g.element(a) * g.element(b));
        }
        CHECK(g.element(g.inverse(a)) == g.element(a).inverse());
        CHECK(g.index_of(g.element(a)) == a);
    }
    CHECK_FALSE(g.contains(Permutation::identity(5)));
}

TEST_CASE("closure enforces its cap") {
    const auto s = groups::symmetric(8);
    CHECK_THROWS_AS(closure(8, s.generators(), 1000), std::length_error);
}

TEST_CASE("right cosets partition the group") {
    const auto g = groups::symmetric(4);
    const auto h = closure(4, {Permutation::from_cycles(4, "(0 1)")});
    const auto cos = right_cosets(g, h);
    CHECK(cos.count() == 12);
    std::vector<std::size_t> sizes(cos.count(), 0);
    for (auto c : cos.coset_of) ++sizes[c];
    for (auto s : sizes) CHECK(s == 2);
    // Hg: h g and g share a coset.
    for (std::size_t x = 0; x < g.order(); ++x)
        CHECK(cos.coset_of[g.multiply(*g.index_of(h.element(1)), x)] == cos.coset_of[x]);
}

TEST_CASE("conjugacy classes match brute-force conjugation") {
    for (const auto& g : {groups::symmetric(4), groups::alternating(5), groups::cyclic(6)}) {
        const auto classes = conjugacy_classes(g);
        std::set<std::set<std::size_t>> got;
        for (const auto& c : classes) got.insert(std::set<std::size_t>(c.begin(), c.end()));
        CHECK(got == oracle::conjugacy_classes(g));
    }
    CHECK(conjugacy_classes(groups::symmetric(4)).size() == 5);
    CHECK(conjugacy_classes(groups::alternating(5)).size() == 5);
}

TEST_CASE("orbits") {
    const auto gens = groups::cyclic(6).generators();
    CHECK(point_orbit(gens, 2, 6).size() == 6);
    CHECK(orbit(gens, PointSet{0, 3}).size() == 3);
}

TEST_CASE("M12 from its six generators") {
    const auto gens = groups::mathieu12_generators();
    CHECK(closure(12, gens).order() == 95040);
    CHECK(closure(12, {gens[0], gens[1], gens[2]}).order() == 72);
    const auto orb = orbit(gens, PointSet{0, 1, 2, 9, 10, 11});
    CHECK(orb.size() == 132);
}

TEST_CASE("multiset sampling is seeded and in range") {
    const auto g = groups::symmetric(4);
    const auto a = sample_multiset(g, 50, 11);
    CHECK(a == sample_multiset(g, 50, 11));
    CHECK(a != sample_multiset(g, 50, 12));
    for (auto x : a) CHECK(x < g.order());
    CHECK_THROWS_AS(sample_multiset(g, 0, 1), std::invalid_argument);
}
