#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "addgen/constructions.hpp"
#include "addgen/element_set.hpp"
#include "addgen/formulas.hpp"
#include "addgen/group.hpp"
#include "addgen/oracle.hpp"
#include "addgen/subgroup.hpp"

using namespace addgen;

namespace {
ElementSet set_of(const GroupType& g, std::initializer_list<int> idx) {
    ElementSet s(g);
    for (int i : idx) s.insert(i);
    return s;
}
}  // namespace

TEST_CASE("standard generating set") {
    const GroupType g = GroupType::of({2, 4});
    const ElementSet e = standard_generating_set(g);
    CHECK(e.size() == 2);
    CHECK(e.contains(Element{1, 0}));
    CHECK(e.contains(Element{0, 1}));
    CHECK(diameter(e) == diam_formula(g));

    for (const auto& gt : all_group_types(16))
        CHECK(diameter(standard_generating_set(gt)) == diam_formula(gt));
}

TEST_CASE("near standard sets") {
    const GroupType g = GroupType::of({2, 4});
    NearStandardSpec spec;
    spec.sigma = {{0, 1}};  // a_0 = e_0 + a_1
    const ElementSet a = near_standard(g, spec);
    CHECK(a.size() == 3);
    CHECK(a.contains(Element{0, 0}));
    CHECK(a.contains(Element{1, 1}));
    CHECK(a.contains(Element{0, 1}));
    CHECK(diameter(a) == 4);

    // the standard spec reproduces standard_generating_set with 0 adjoined
    ElementSet std0 = standard_generating_set(g);
    std0.insert(0);
    CHECK(near_standard(g, NearStandardSpec::standard()) == std0);

    NearStandardSpec bad;
    bad.sigma = {{1, 0}};  // sigma must increase
    CHECK_THROWS_AS(near_standard(g, bad), std::invalid_argument);
}

TEST_CASE("near standard decomposition") {
    const GroupType g = GroupType::of({2, 4});
    NearStandardSpec spec;
    spec.sigma = {{0, 1}};
    const ElementSet a = near_standard(g, spec);
    const auto d = decompose_near_standard(g, spec, a, Element{1, 3});
    CHECK(d.coefficients == std::vector<int>{1, 2});
    CHECK(d.total == 3);

    // the total is the positive length, for every element
    const auto lt = length_table(a);
    for (int x = 0; x < g.order(); ++x)
        CHECK(decompose_near_standard(g, spec, a, g.element_at(x)).total == lt.at(x));

    // mismatched set is rejected
    CHECK_THROWS_AS(decompose_near_standard(g, spec, set_of(g, {0, 1}), Element{0, 1}),
                    std::invalid_argument);
}

TEST_CASE("near standard family equals the extremal sets") {
    for (const auto& g : all_group_types(12)) {
        const auto family = near_standard_family(g);
        const auto extremal = enumerate_extremal_generating_sets(g);
        CHECK(family == extremal);
    }
    // spot sizes
    CHECK(near_standard_family(GroupType::of({4})).size() == 2);
    CHECK(near_standard_family(GroupType::of({2, 2})).size() == 3);
    CHECK(near_standard_family(GroupType::of({3})).size() == 2);
}

TEST_CASE("interval sets") {
    const ElementSet a = interval_set(9, 4);
    CHECK(a.group() == GroupType::of({9}));
    CHECK(a.indices() == std::vector<int>{0, 1, 2});
    CHECK(is_rho_maximal(a, 4));
    CHECK(is_aperiodic(a));

    CHECK_THROWS_AS(interval_set(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(interval_set(9, 9), std::invalid_argument);

    // attains the cyclic extremal size t_rho(Z_m)
    for (int m = 3; m <= 16; ++m)
        for (int rho = 2; rho < m; ++rho) {
            const ElementSet s = interval_set(m, rho);
            CHECK(is_rho_maximal(s, rho));
            CHECK(is_aperiodic(s));
            const auto t = t_formula(GroupType::of({m}), rho);
            REQUIRE(t.status == FormulaStatus::known);
            CHECK(s.size() == t.value);
        }
}

TEST_CASE("punctured coset") {
    const GroupType z10 = GroupType::of({10});
    const auto h = Subgroup::closure(z10, {Element{2}});
    const ElementSet a = punctured_coset(z10, h, Element{1});
    CHECK(a.indices() == std::vector<int>{0, 3, 5, 7, 9});
    CHECK(bounded_generation(a, 2).indices() == std::vector<int>{0, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(is_rho_maximal(a, 3));
    CHECK(is_aperiodic(a));
    CHECK(a.size() == 5);  // |G|/n with n = 2

    // g inside H is rejected, as is |H| < 3
    CHECK_THROWS_AS(punctured_coset(z10, h, Element{2}), std::invalid_argument);
    const auto h2 = Subgroup::closure(z10, {Element{5}});
    CHECK_THROWS_AS(punctured_coset(z10, h2, Element{1}), std::invalid_argument);
}

TEST_CASE("odd pairing set") {
    const GroupType z5 = GroupType::of({5});
    const ElementSet a = odd_pairing_set(z5, Element{1});
    CHECK(a.indices() == std::vector<int>{0, 2});
    // pair_sum is not a sum of two members
    CHECK_FALSE(sumset(a, a).contains(Element{1}));

    for (int m : {5, 7, 9, 11, 15}) {
        const GroupType g = GroupType::of({m});
        const ElementSet s = odd_pairing_set(g, Element{1});
        CHECK(s.contains(0));
        CHECK(s.size() == (m - 1) / 2);
        CHECK_FALSE(sumset(s, s).contains(Element{1}));
    }
    CHECK_THROWS_AS(odd_pairing_set(GroupType::of({4}), Element{1}), std::invalid_argument);
}

TEST_CASE("product 4-maximal construction") {
    const GroupType z7 = GroupType::of({7});
    const ElementSet a2 = interval_set(7, 4);  // aperiodic 4-maximal of size 2
    const auto [g, a] = product_4maximal(z7, a2);
    CHECK(g == GroupType::of({7, 7}));
    CHECK(a.size() == 16);
    CHECK(is_rho_maximal(a, 4));
    CHECK(is_aperiodic(a));
    CHECK(a.size() == (g.order() - 1) / 3);

    // modulus not 1 mod 3 is rejected
    CHECK_THROWS_AS(product_4maximal(GroupType::of({5}), interval_set(5, 4)),
                    std::invalid_argument);
    // second factor must be an aperiodic 4-maximal set of the right size
    CHECK_THROWS_AS(product_4maximal(z7, set_of(z7, {0, 1, 2})), std::invalid_argument);
}

TEST_CASE("double coset") {
    const GroupType z10 = GroupType::of({10});
    const auto h = Subgroup::closure(z10, {Element{5}});
    const ElementSet a = double_coset(z10, h, Element{1});
    CHECK(a.indices() == std::vector<int>{0, 1, 5, 6});
    CHECK(diameter(a).has_value());
    CHECK(*diameter(a) >= 4);
    CHECK(a.size() == 4);  // 2|G|/(rho+1) at rho = 4

    // the coset representative must generate the (cyclic) quotient
    const GroupType g22 = GroupType::of({2, 2});
    const auto triv = Subgroup::closure(g22, ElementSet(g22));
    CHECK_THROWS_AS(double_coset(g22, triv, Element{1, 0}), std::invalid_argument);
}

TEST_CASE("lift") {
    const GroupType z12 = GroupType::of({12});
    const auto h = Subgroup::closure(z12, {Element{6}});
    const GroupType q = h.quotient_type();
    REQUIRE(q == GroupType::of({6}));

    ElementSet abar(q);
    abar.insert(0);
    abar.insert(q.index_of(Element{1}));
    const ElementSet a = lift(z12, h, abar);
    CHECK(a.size() == abar.size() * h.size());
    CHECK(h.members().is_subset_of(a));
    CHECK(h.members().is_subset_of(period_set(a)));
    CHECK(diameter(a) == diameter(abar));
    // the lift projects back onto abar
    for (int x : a.indices()) CHECK(abar.contains(h.project(x)));

    // abar must contain 0 and generate the quotient
    ElementSet no_zero(q);
    no_zero.insert(q.index_of(Element{1}));
    CHECK_THROWS_AS(lift(z12, h, no_zero), std::invalid_argument);
    ElementSet non_gen(q);
    non_gen.insert(0);
    non_gen.insert(q.index_of(Element{2}));
    CHECK_THROWS_AS(lift(z12, h, non_gen), std::invalid_argument);
}

TEST_CASE("random lift round trips") {
    std::mt19937 rng(20240824);
    std::vector<GroupType> pool;
    for (const auto& g : all_group_types(32)) pool.push_back(g);
    int done = 0;
    for (int trial = 0; done < 200 && trial < 4000; ++trial) {
        const GroupType& g = pool[rng() % pool.size()];
        const auto subs = enumerate_subgroups(g);
        const auto& h = subs[rng() % subs.size()];
        if (h.is_whole_group()) continue;
        const GroupType& q = h.quotient_type();
        ElementSet abar(q);
        abar.insert(0);
        for (int x = 1; x < q.order(); ++x)
            if (rng() % 2) abar.insert(x);
        if (!diameter(abar).has_value()) continue;
        const ElementSet a = lift(g, h, abar);
        // project the lift back down: exactly abar
        ElementSet back(q);
        for (int x : a.indices()) back.insert(h.project(x));
        CHECK(back == abar);
        CHECK(a.size() == abar.size() * h.size());
        CHECK(diameter(a) == diameter(abar));
        ++done;
    }
    CHECK(done == 200);
}
