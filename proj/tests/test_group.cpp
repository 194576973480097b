#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "addgen/element_set.hpp"
#include "addgen/group.hpp"
#include "addgen/subgroup.hpp"

using namespace addgen;

TEST_CASE("invariant factor canonicalization") {
    CHECK(GroupType::of({4, 2}).invariant_factors() == std::vector<int>{2, 4});
    CHECK(GroupType::of({2, 3}).invariant_factors() == std::vector<int>{6});
    CHECK(GroupType::of({1, 5}).invariant_factors() == std::vector<int>{5});
    CHECK(GroupType::of({1}).trivial());
    CHECK(GroupType::of({2, 2, 4}).invariant_factors() == std::vector<int>{2, 2, 4});
    CHECK(GroupType::of({6, 4}).invariant_factors() == std::vector<int>{2, 12});
    CHECK_THROWS_AS(GroupType::of({0}), std::invalid_argument);
    CHECK_THROWS_AS(GroupType::of({-3}), std::invalid_argument);
}

TEST_CASE("make_group is idempotent") {
    for (const auto& g : all_group_types(16)) {
        auto f = g.invariant_factors();
        CHECK(GroupType::of(f) == g);
    }
}

TEST_CASE("group type enumeration") {
    // One type per partition-into-chains; 24 types of order 2..16.
    CHECK(all_group_types(16).size() == 24);
    CHECK(all_group_types(4).size() == 4);  // (2), (3), (4), (2,2)
    for (const auto& g : all_group_types(16)) {
        long long order = 1;
        int prev = 1;
        for (int m : g.invariant_factors()) {
            CHECK(m % prev == 0);
            prev = m;
            order *= m;
        }
        CHECK(order == g.order());
        CHECK(g.exponent() == g.invariant_factors().back());
    }
}

TEST_CASE("element order") {
    const GroupType g = GroupType::of({2, 4});
    CHECK(g.element_order(Element{0, 0}) == 1);
    CHECK(g.element_order(Element{0, 1}) == 4);
    CHECK(g.element_order(Element{1, 2}) == 2);
    for (int x = 0; x < g.order(); ++x) CHECK(g.exponent() % g.element_order(x) == 0);
}

TEST_CASE("mixed radix indexing round trip") {
    const GroupType g = GroupType::of({2, 4, 8});
    for (int x = 0; x < g.order(); ++x) CHECK(g.index_of(g.element_at(x)) == x);
    CHECK_THROWS_AS(g.index_of(Element{2, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(g.index_of(Element{0, 0}), std::invalid_argument);
}

TEST_CASE("subgroup closure") {
    const GroupType z4 = GroupType::of({4});
    CHECK(Subgroup::closure(z4, ElementSet(z4, {Element{2}})).members().indices() ==
          std::vector<int>{0, 2});
    CHECK(Subgroup::closure(z4, ElementSet(z4)).members().indices() == std::vector<int>{0});

    const GroupType g = GroupType::of({2, 4});
    const auto h = Subgroup::closure(g, {Element{1, 1}});
    std::set<int> want = {g.index_of(Element{0, 0}), g.index_of(Element{1, 1}),
                          g.index_of(Element{0, 2}), g.index_of(Element{1, 3})};
    const auto got = h.members().indices();
    CHECK(std::set<int>(got.begin(), got.end()) == want);
}

TEST_CASE("subgroup enumeration") {
    CHECK(enumerate_subgroups(GroupType::of({4})).size() == 3);
    CHECK(enumerate_subgroups(GroupType::of({2, 2})).size() == 5);
    CHECK(enumerate_subgroups(GroupType()).size() == 1);
    // Cyclic groups: one subgroup per divisor.
    for (int m = 2; m <= 16; ++m) {
        int divisors = 0;
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) ++divisors;
        CHECK(enumerate_subgroups(GroupType::of({m})).size() == divisors);
    }
}

TEST_CASE("quotient types") {
    const GroupType z4 = GroupType::of({4});
    const auto h1 = Subgroup::closure(z4, {Element{2}});
    CHECK(h1.quotient_type() == GroupType::of({2}));

    const GroupType g = GroupType::of({2, 8});
    const auto h2 = Subgroup::closure(g, {Element{0, 4}});
    CHECK(h2.quotient_type() == GroupType::of({2, 4}));

    const auto whole = Subgroup::closure(g, {Element{1, 0}, Element{0, 1}});
    CHECK(whole.quotient_type().trivial());
}

TEST_CASE("Lagrange and projection homomorphism") {
    std::mt19937 rng(20240817);
    for (const auto& g : all_group_types(16)) {
        for (const auto& h : enumerate_subgroups(g)) {
            CHECK(h.size() * h.quotient_type().order() == g.order());
            const auto& q = h.quotient_type();
            for (int trial = 0; trial < 50; ++trial) {
                const int a = static_cast<int>(rng() % g.order());
                const int b = static_cast<int>(rng() % g.order());
                CHECK(h.project(g.add(a, b)) == q.add(h.project(a), h.project(b)));
            }
        }
    }
}

TEST_CASE("canonical form recovers the type") {
    for (const auto& g : all_group_types(16)) {
        auto [type, iso] = canonical_form(g.order_int(),
                                          [&](int a, int b) { return g.add(a, b); });
        CHECK(type == g);
        // iso must be a bijective homomorphism
        std::set<int> image(iso.begin(), iso.end());
        CHECK(static_cast<long long>(image.size()) == g.order());
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < 4 && b < g.order(); ++b)
                CHECK(iso[g.add(a, b)] == type.add(iso[a], iso[b]));
    }
}

TEST_CASE("direct sums") {
    auto [g, embed] = direct_sum(GroupType::of({2}), GroupType::of({4}));
    CHECK(g == GroupType::of({2, 4}));
    std::set<int> image(embed.begin(), embed.end());
    CHECK(image.size() == 8);

    auto [g2, embed2] = direct_sum(GroupType::of({2}), GroupType::of({3}));
    CHECK(g2 == GroupType::of({6}));
    CHECK(embed2.size() == 6);
}
