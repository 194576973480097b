#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>

#include "addgen/formulas.hpp"
#include "addgen/group.hpp"
#include "addgen/oracle.hpp"

using namespace addgen;

TEST_CASE("diam formula") {
    CHECK(diam_formula(GroupType::of({6})) == 5);
    CHECK(diam_formula(GroupType::of({2, 4})) == 4);
    CHECK(diam_formula(GroupType::of({2, 2, 2, 2})) == 4);
    CHECK(diam_formula(GroupType()) == 0);
}

TEST_CASE("t formula dispatch") {
    auto r = t_formula(GroupType::of({9}), 4);
    CHECK(r.status == FormulaStatus::known);
    CHECK(r.value == 3);
    CHECK(r.source == "2.7i");

    r = t_formula(GroupType::of({2, 2, 2, 2}), 4);
    CHECK(r.status == FormulaStatus::known);
    CHECK(r.value == 5);
    CHECK(r.source == "eq2.1");

    // t_4 of Z_5 x Z_5 is open; never interpolated.
    CHECK(t_formula(GroupType::of({5, 5}), 4).status == FormulaStatus::unknown);

    // cyclic closed form, rho in [2, m-1]
    r = t_formula(GroupType::of({8}), 3);
    CHECK(r.status == FormulaStatus::known);
    CHECK(r.value == 4);
    CHECK(r.source == "2.5");

    // out of range: rho beyond diam+ or rho = 1
    CHECK(t_formula(GroupType::of({5}), 5).status == FormulaStatus::out_of_range);
    CHECK(t_formula(GroupType::of({5}), 5).as_value() == 0);
    CHECK(t_formula(GroupType::of({5}), 1).as_value() == 0);
}

TEST_CASE("s formula dispatch") {
    auto r = s_formula(GroupType::of({10}), 4);
    CHECK(r.status == FormulaStatus::known);
    CHECK(r.value == 4);

    r = s_formula(GroupType::of({9}), 4);
    CHECK(r.status == FormulaStatus::known);
    CHECK(r.value == 3);

    for (const auto& g : all_group_types(12)) CHECK(s_formula(g, 1).as_value() == g.order());
}

TEST_CASE("eta") {
    CHECK(eta(GroupType::of({10})) == 2);
    CHECK(eta(GroupType::of({2, 2, 2, 2})) == 0);
    CHECK(eta(GroupType::of({7})) == 0);
    CHECK(eta(GroupType::of({9})) == 0);
    CHECK(eta(GroupType::of({4, 4})) == 2);  // order-8 quotient 2,4 has exponent 4
    CHECK(eta(GroupType::of({15})) == 3);
}

TEST_CASE("upper bounds") {
    CHECK(t_upper_bound(GroupType::of({5}), 3) == 2);
    CHECK(t_upper_bound(GroupType::of({2, 8}), 6) == 3);

    CHECK(s_upper_bound(GroupType::of({10}), 4) == Rational{4, 1});
    CHECK(4 == s_upper_bound(GroupType::of({10}), 4));
    CHECK(s_upper_bound(GroupType::of({2, 2, 2, 2}), 4) == Rational{32, 5});
    CHECK(s_upper_bound(GroupType::of({12}), 5) == Rational{4, 1});
    CHECK(s_upper_bound(GroupType::of({2, 2, 2, 2}), 4).to_string() == "32/5");
}

TEST_CASE("s from quotients") {
    const TProvider exact = [](const GroupType& q, int rho) -> std::optional<long long> {
        return t_oracle(q, rho);
    };
    CHECK(s_from_quotients(GroupType::of({10}), 4, exact) == 4);
    CHECK(s_from_quotients(GroupType::of({2, 2, 2, 2}), 4, exact) == 5);
    CHECK(s_from_quotients(GroupType::of({9}), 4, exact) == 3);

    const TProvider never = [](const GroupType&, int) -> std::optional<long long> {
        return std::nullopt;
    };
    CHECK_FALSE(s_from_quotients(GroupType::of({10}), 4, never).has_value());
}

TEST_CASE("t equals s for small primes") {
    // Corollary: for prime p and 2 <= rho <= p-1, t_rho(Z_p) = s_rho(Z_p).
    for (int p : {5, 7, 11, 13}) {
        const GroupType g = GroupType::of({p});
        for (int rho = 2; rho < p; ++rho) {
            const auto t = t_formula(g, rho);
            const auto s = s_formula(g, rho);
            REQUIRE(t.status == FormulaStatus::known);
            REQUIRE(s.status == FormulaStatus::known);
            CHECK(t.value == s.value);
        }
    }
}

TEST_CASE("formulas match the oracle where defined") {
    for (const auto& g : all_group_types(10)) {
        const long long d = diam_formula(g);
        for (int rho = 1; rho <= d + 1; ++rho) {
            const auto t = t_formula(g, rho);
            if (t.is_known()) CHECK(*t.as_value() == t_oracle(g, rho));
            const auto s = s_formula(g, rho);
            if (s.is_known()) CHECK(*s.as_value() == s_oracle(g, rho));
        }
    }
}
