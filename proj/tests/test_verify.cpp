#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "addgen/constructions.hpp"
#include "addgen/element_set.hpp"
#include "addgen/group.hpp"
#include "addgen/oracle.hpp"
#include "addgen/verify.hpp"

using namespace addgen;

namespace {
ElementSet set_of(const GroupType& g, std::initializer_list<int> idx) {
    ElementSet s(g);
    for (int i : idx) s.insert(i);
    return s;
}
}  // namespace

TEST_CASE("kneser verification") {
    const GroupType z10 = GroupType::of({10});
    // non-vacuous: A+B small, periodic
    auto r = verify_kneser(set_of(z10, {0, 5}), set_of(z10, {1, 6}));
    CHECK(r.verdict == Verdict::pass);
    REQUIRE(r.witnesses.size() == 1);  // the period H
    CHECK(r.witnesses[0] == set_of(z10, {0, 5}));

    // vacuous: the sumset is already large
    auto r2 = verify_kneser(set_of(z10, {0, 1, 3}), set_of(z10, {0, 2, 7}));
    CHECK(r2.verdict == Verdict::pass);

    // aperiodic tight case in Z_7
    const GroupType z7 = GroupType::of({7});
    auto r3 = verify_kneser(set_of(z7, {0, 1}), set_of(z7, {0, 1, 2}));
    CHECK(r3.verdict == Verdict::pass);
}

TEST_CASE("verify_theorem dispatch") {
    auto r = verify_theorem("2.1", GroupType::of({2, 4}));
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.theorem_id == "2.1");
    CHECK(r.oracle_value == 4);
    CHECK(r.formula_value == 4);

    auto r9 = verify_theorem("2.9", GroupType::of({10}), 4);
    CHECK(r9.verdict == Verdict::pass);
    CHECK_FALSE(r9.witnesses.empty());
    for (const auto& w : r9.witnesses) {
        CHECK(w.size() == 4);
        CHECK(diameter(w).has_value());
    }

    auto r5 = verify_theorem("2.5", GroupType::of({8}), 3);
    CHECK(r5.verdict == Verdict::pass);
    CHECK(r5.oracle_value == 4);

    CHECK_THROWS_AS(verify_theorem("9.9", GroupType::of({8})), std::invalid_argument);
}

TEST_CASE("every tag passes on a sample of groups") {
    for (const auto& tag : theorem_tags()) {
        for (const auto& g : all_group_types(12)) {
            auto r = verify_theorem(tag, g);
            CHECK(r.verdict == Verdict::pass);
            if (r.verdict != Verdict::pass)
                MESSAGE("tag ", tag, " group ", g.to_string(), ": ", r.to_line());
        }
    }
}

TEST_CASE("appendix verification") {
    auto r = verify_appendix(3);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.group == GroupType::of({2, 8}));
    CHECK(r.notes.find("tier=exhaustive") != std::string::npos);
    CHECK_THROWS_AS(verify_appendix(2), std::invalid_argument);

    SearchBudget wide;
    wide.bnb_order_bound = 64;
    auto r4 = verify_appendix(4, wide);
    CHECK(r4.verdict == Verdict::pass);
    CHECK(r4.group == GroupType::of({2, 16}));
    CHECK(r4.notes.find("tier=constrained") != std::string::npos);

    // out of budget: skipped, never a silent pass
    SearchBudget narrow;
    narrow.bnb_order_bound = 16;
    CHECK(verify_appendix(4, narrow).verdict == Verdict::skipped);
}

TEST_CASE("report lines are canonical") {
    auto a = verify_theorem("2.4", GroupType::of({9}), 2);
    auto b = verify_theorem("2.4", GroupType::of({9}), 2);
    b.runtime_ms = a.runtime_ms + 1000;  // runtime must not affect the line
    CHECK(a.to_line() == b.to_line());
    CHECK(a.to_line().find("tag=2.4") != std::string::npos);
    CHECK(a.to_line().find("verdict=pass") != std::string::npos);
    CHECK(std::string(VerificationReport::csv_header()) ==
          "tag,group,rho,oracle,formula,verdict,runtime_ms");
}

TEST_CASE("sweep is deterministic across worker counts") {
    SearchBudget serial;
    serial.jobs = 1;
    SearchBudget parallel;
    parallel.jobs = 4;

    const auto r1 = verify_sweep(8, serial);
    const auto r2 = verify_sweep(8, parallel);
    REQUIRE(!r1.empty());
    CHECK(serialize_reports(r1) == serialize_reports(r2));
    for (const auto& r : r1) CHECK(r.verdict == Verdict::pass);

    const auto csv = reports_to_csv(r1);
    CHECK(csv.rfind("tag,group,rho,oracle,formula,verdict,runtime_ms", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r1.size()) + 1);
}

TEST_CASE("vanishing-t scan") {
    const auto reports = verify_sweep(0, {});  // guard: empty sweep allowed
    CHECK(reports.empty());

    const auto scan = scan_vanishing_t(16, {});
    bool found_2_8 = false;
    for (const auto& r : scan) {
        CHECK(r.verdict == Verdict::reported_only);
        CHECK(r.oracle_value == 0);
        if (r.group == GroupType::of({2, 8}) && r.rho == 7) found_2_8 = true;
    }
    CHECK(found_2_8);
}
