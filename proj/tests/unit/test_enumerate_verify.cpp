#include "doctest.h"

#include "bressoud/errors.hpp"
#include "bressoud/serialize.hpp"
#include "bressoud/verify.hpp"

#include "golden.hpp"

using namespace bressoud;

TEST_CASE("enumeration of weight zero and weight three") {
    CHECK(enumerate_overpartitions(0, {0, 3, 7}, 10).size() == 1);
    CHECK(enumerate_overpartitions(0, {0, 3, 7}, 10)[0].empty());
    const auto three = enumerate_overpartitions(3, {0, 3, 7}, 10);
    REQUIRE(three.size() == 2);
    /* Exactly the plain and the overlined single part of size 3. */
    CHECK(((three[0] == Overpartition::parse("3") && three[1] == Overpartition::parse("3~")) ||
           (three[0] == Overpartition::parse("3~") && three[1] == Overpartition::parse("3"))));
}

TEST_CASE("enumeration matches the counting oracle and known overpartition numbers") {
    for (int n = 0; n <= 24; ++n) {
        const auto stream = enumerate_overpartitions(n, {0, 3, 7}, 10);
        CHECK(static_cast<long long>(stream.size()) ==
              count_overpartitions_oracle(n, {0, 3, 7}, 10));
    }
    /* With every residue allowed the counts are the classical overpartition
     * numbers 1, 2, 4, 8, 14, 24, 40, 64, 100, 154. */
    const long long classical[] = {1, 2, 4, 8, 14, 24, 40, 64, 100, 154};
    for (int n = 0; n <= 9; ++n)
        CHECK(count_overpartitions_oracle(n, {0, 1, 2}, 3) == classical[n]);
    for (int n = 0; n <= 12; ++n)
        CHECK(static_cast<long long>(enumerate_overpartitions(n, {0, 1, 2}, 3).size()) ==
              count_overpartitions_oracle(n, {0, 1, 2}, 3));
}

TEST_CASE("enumeration is deterministic and canonical") {
    const auto first = enumerate_overpartitions(14, {0, 3, 7}, 10);
    const auto second = enumerate_overpartitions(14, {0, 3, 7}, 10);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
    for (const Overpartition& pi : first) {
        CHECK(pi.weight() == 14);
        CHECK(Overpartition::from_parts(pi.parts()) == pi); // already canonical
    }
}

TEST_CASE("family counts at small weight") {
    CHECK(count_family(FamilyId::B0bar, golden::kParams, 0) == 1);
    CHECK(count_family(FamilyId::B0bar, golden::kParams, 3) == 1);  // only 3~
    CHECK(count_family(FamilyId::B0bar, golden::kParams, 7) == 1);  // only 7~
    CHECK(count_family(FamilyId::B0bar, golden::kParams, 10) == 3); // 10, 10~, 7~3~
    CHECK(count_family(FamilyId::B0bar, golden::kParams, 6) == 0);
    CHECK(count_family(FamilyId::A0bar, golden::kParams, 10) == 3);
    FamilyParams deta;
    deta.eta = 10;
    CHECK(count_family(FamilyId::Deta, deta, 30) == 2); // 30 and 20+10
}

TEST_CASE("identity reports pass at desk scale") {
    const VerifyReport main_report =
        verify_identity_serial(IdentityKind::A0barEqB0bar, golden::kParams, 0, 24);
    CHECK(main_report.overall);
    CHECK(main_report.witnesses.empty());
    CHECK(main_report.per_n.size() == 25);
    CHECK(main_report.per_n[10].lhs == 3);
    CHECK(main_report.per_n[10].rhs == 3);
    const VerifyReport factor_report =
        verify_identity_serial(IdentityKind::B0barEqProduct, golden::kParams, 0, 24);
    CHECK(factor_report.overall);
    FamilyParams small{{1, 2}, 3, 4, 2, 0};
    for (int j : {0, 1}) {
        const VerifyReport classical =
            verify_identity_serial(IdentityKind::AjEqBj, small, j, 20);
        CHECK(classical.overall);
    }
}

TEST_CASE("parallel verification reproduces the serial report byte for byte") {
    const VerifyReport serial =
        verify_identity_serial(IdentityKind::A0barEqB0bar, golden::kParams, 0, 20);
    const VerifyReport parallel =
        verify_identity_parallel(IdentityKind::A0barEqB0bar, golden::kParams, 0, 20, 3);
    CHECK(serial == parallel);
    CHECK(report_to_json(serial).dump() == report_to_json(parallel).dump());
    const VerifyReport rt_serial = roundtrip_check_serial(golden::kParams, 16);
    const VerifyReport rt_parallel = roundtrip_check_parallel(golden::kParams, 16, 2);
    CHECK(rt_serial == rt_parallel);
}

TEST_CASE("round trips hold on both tuples") {
    const VerifyReport a = roundtrip_check_serial(golden::kParams, 20);
    CHECK(a.overall);
    CHECK(a.witnesses.empty());
    for (const PerN& row : a.per_n) CHECK(row.lhs == row.rhs); // members match pairs
    const VerifyReport b = roundtrip_check_serial(golden::kParamsLambda3, 40);
    CHECK(b.overall);
    const VerifyReport empty_only = roundtrip_check_serial(golden::kParams, 0);
    CHECK(empty_only.overall);
    CHECK(empty_only.per_n.size() == 1);
    CHECK(empty_only.per_n[0].lhs == 1); // the empty overpartition
}

TEST_CASE("reports reject invalid parameters") {
    CHECK_THROWS_AS(
        verify_identity_serial(IdentityKind::A0barEqB0bar, FamilyParams{{3, 7}, 10, 3, 3, 0},
                               0, 10),
        ParamError);
    CHECK_THROWS_AS(verify_identity_serial(IdentityKind::GfBj, golden::kParams, 2, 10),
                    ParamError);
    CHECK_THROWS_AS(roundtrip_check_serial(FamilyParams{{1, 2}, 3, 3, 2, 0}, 10), ParamError);
}

TEST_CASE("report serialization is stable and witness-free on success") {
    const VerifyReport report =
        verify_identity_serial(IdentityKind::GfA0bar, golden::kParams, 0, 12);
    CHECK(report.overall);
    const nlohmann::json j = report_to_json(report);
    CHECK(j["identity"] == "gfA0bar");
    CHECK(j["max_n"] == 12);
    CHECK(j["overall"] == true);
    CHECK(j["witnesses"].empty());
    CHECK(j["per_n"].size() == 13);
    CHECK(report_to_json(report).dump() == j.dump());
    const std::string csv = report_to_csv(report);
    CHECK(csv.substr(0, 15) == "n,lhs,rhs,pass\n");
    CHECK(csv.find("0,1,1,1") != std::string::npos);
}

TEST_CASE("failing rows surface self-contained witnesses") {
    VerifyReport failing;
    failing.identity = "A0bar_eq_B0bar";
    failing.params = golden::kParams;
    failing.max_n = 1;
    failing.per_n = {{0, 1, 1, true}, {1, 4, 5, false}};
    failing.overall = false;
    failing.witnesses = {"n=1: lhs=4 rhs=5"};
    const std::string csv = report_to_csv(failing);
    CHECK(csv.find("1,4,5,0") != std::string::npos);
    const nlohmann::json j = report_to_json(failing);
    CHECK(j["overall"] == false);
    CHECK(j["witnesses"][0] == "n=1: lhs=4 rhs=5");
}
