#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "addgen/element_set.hpp"
#include "addgen/errors.hpp"
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

TEST_CASE("is_rho_maximal spot checks") {
    const GroupType z5 = GroupType::of({5});
    CHECK(is_rho_maximal(set_of(z5, {0, 1}), 3));
    CHECK_FALSE(is_rho_maximal(set_of(z5, {0, 1, 2}), 3));
    CHECK(is_rho_maximal(ElementSet::full(z5), 1));
    CHECK_FALSE(is_rho_maximal(set_of(z5, {0, 1}), 5));  // beyond limit(A)=4
}

TEST_CASE("enumerate rho-maximal sets") {
    const GroupType z5 = GroupType::of({5});
    const auto recs = enumerate_rho_maximal(z5, 3, false);
    CHECK(!recs.empty());
    for (const auto& r : recs) {
        CHECK(r.rho == 3);
        CHECK(r.set.contains(0));
        CHECK(r.set.size() <= 2);
        CHECK(is_rho_maximal(r.set, 3));
        // the certificate lies outside <A>_{rho-1}^+
        CHECK_FALSE(bounded_generation(r.set, 2).contains(r.certificate));
        CHECK(!r.to_line().empty());
    }

    // rho = 1: exactly one maximal set, the whole group.
    const auto ones = enumerate_rho_maximal(z5, 1, false);
    REQUIRE(ones.size() == 1);
    CHECK(ones[0].set == ElementSet::full(z5));

    // Z_2 + Z_8, rho = 7: no aperiodic 7-maximal set exists.
    CHECK(enumerate_rho_maximal(GroupType::of({2, 8}), 7, true).empty());
}

TEST_CASE("t oracle values") {
    CHECK(t_oracle(GroupType::of({2, 2, 2, 2}), 4) == 5);
    CHECK(t_oracle(GroupType::of({2, 8}), 7) == 0);
    CHECK(t_oracle(GroupType::of({2, 8}), 6) == 3);  // vanishing starts one index later
    CHECK(t_oracle(GroupType::of({5}), 3) == 2);
    CHECK(t_oracle(GroupType::of({6}), 4) == 2);
    CHECK(t_oracle(GroupType::of({9}), 4) == 3);
    // rho = 1 and rho beyond diam+ give 0 by definition.
    CHECK(t_oracle(GroupType::of({5}), 1) == 0);
    CHECK(t_oracle(GroupType::of({5}), 5) == 0);
}

TEST_CASE("s oracle values") {
    for (const auto& g : all_group_types(12)) CHECK(s_oracle(g, 1) == g.order());
    CHECK(s_oracle(GroupType::of({2, 2, 2, 2}), 4) == 5);
    CHECK(s_oracle(GroupType::of({10}), 4) == 4);
    CHECK(s_oracle(GroupType::of({9}), 4) == 3);
}

TEST_CASE("s oracle monotone and vanishing beyond diam") {
    for (const auto& g : all_group_types(12)) {
        const long long d = absolute_diameter_oracle(g);
        long long prev = s_oracle(g, 1);
        for (int rho = 2; rho <= d; ++rho) {
            const long long cur = s_oracle(g, rho);
            CHECK(cur <= prev);
            CHECK(cur >= 2);
            prev = cur;
        }
        CHECK(s_oracle(g, static_cast<int>(d) + 1) == 0);
    }
}

TEST_CASE("absolute diameter oracle") {
    CHECK(absolute_diameter_oracle(GroupType::of({6})) == 5);
    CHECK(absolute_diameter_oracle(GroupType::of({2, 4})) == 4);
    CHECK(absolute_diameter_oracle(GroupType()) == 0);
    for (const auto& g : all_group_types(14))
        CHECK(absolute_diameter_oracle(g) == diam_formula(g));
}

TEST_CASE("extremal generating sets") {
    const GroupType z4 = GroupType::of({4});
    const auto ext4 = enumerate_extremal_generating_sets(z4);
    REQUIRE(ext4.size() == 2);
    CHECK(ext4[0] == set_of(z4, {0, 1}));
    CHECK(ext4[1] == set_of(z4, {0, 3}));

    CHECK(enumerate_extremal_generating_sets(GroupType::of({2, 2})).size() == 3);

    const GroupType z3 = GroupType::of({3});
    const auto ext3 = enumerate_extremal_generating_sets(z3);
    REQUIRE(ext3.size() == 2);
    CHECK(ext3[0] == set_of(z3, {0, 1}));
    CHECK(ext3[1] == set_of(z3, {0, 2}));

    for (const auto& a : ext4) CHECK(diameter(a) == absolute_diameter_oracle(z4));
}

TEST_CASE("maximal-set records respect Lemma 5.1") {
    // For a rho-maximal A and tau in [1, rho-1], pi(<A>_tau^+) = pi(A).
    for (const auto& g : all_group_types(10)) {
        const long long d = absolute_diameter_oracle(g);
        for (int rho = 2; rho <= d; ++rho) {
            for (const auto& r : enumerate_rho_maximal(g, rho, false)) {
                const ElementSet pa = period_set(r.set);
                for (int tau = 1; tau < rho; ++tau)
                    CHECK(period_set(bounded_generation(r.set, tau)) == pa);
            }
        }
    }
}

TEST_CASE("branch and bound tier") {
    SearchBudget b;
    b.exhaustive_order_bound = 16;  // force Z_18 into the bnb tier
    b.bnb_order_bound = 64;

    const auto out = t_bnb(GroupType::of({18}), 5, b);
    CHECK(out.completed);
    REQUIRE(out.exact.has_value());
    CHECK(*out.exact == 5);
    CHECK(out.lower == 5);
    CHECK(out.upper == 5);
    REQUIRE(out.witness.has_value());
    CHECK(is_rho_maximal(*out.witness, 5));
    CHECK(is_aperiodic(*out.witness));
    CHECK(out.witness->size() == 5);

    const auto out2 = t_bnb(GroupType::of({18}), 17, b);
    CHECK(out2.completed);
    CHECK(out2.exact == 2);

    // t_oracle agrees with the bnb tier on a group both can handle.
    CHECK(t_oracle(GroupType::of({18}), 5, b) == 5);
}

TEST_CASE("budget errors carry bounds") {
    SearchBudget tiny;
    tiny.exhaustive_order_bound = 4;
    tiny.bnb_order_bound = 4;
    CHECK_THROWS_AS(t_oracle(GroupType::of({9}), 3, tiny), BudgetError);
    CHECK_THROWS_AS(enumerate_subgroups(GroupType::of({16}), 8), BudgetError);
}

TEST_CASE("survey agrees with the direct definition") {
    const GroupType g = GroupType::of({2, 4});
    SearchBudget budget;
    const auto survey = SubsetSurvey::get(g, budget);
    for (std::uint32_t mask = 0; mask < survey->mask_count(); mask += 7) {
        const ElementSet a = survey->set_of(mask);
        CHECK(survey->generating(mask) == diameter(a).has_value());
        if (survey->generating(mask)) CHECK(survey->limit(mask) == *diameter(a));
        CHECK(survey->aperiodic(mask) == is_aperiodic(a));
        CHECK(survey->set_size(mask) == a.size());
        CHECK(survey->mask_of(a) == mask);
        for (int rho = 1; rho <= 5; ++rho)
            CHECK(survey->is_rho_maximal(mask, rho) == is_rho_maximal(a, rho));
    }
}
