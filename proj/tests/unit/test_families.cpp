#include "doctest.h"

#include "bressoud/bands.hpp"
#include "bressoud/enumerate.hpp"
#include "bressoud/errors.hpp"

#include "golden.hpp"

using namespace bressoud;

TEST_CASE("Bbar membership") {
    CHECK(is_in_Bbar(golden::op(golden::kBandExample), golden::kParamsLambda3));
    CHECK(is_in_Bbar(Overpartition{}, golden::kParams));
    CHECK(!is_in_Bbar(Overpartition::parse("7"), golden::kParams)); // plain non-multiple
    CHECK(!is_in_Bbar(Overpartition::parse("5~"), golden::kParams)); // residue 5 not allowed
}

TEST_CASE("B0bar membership") {
    CHECK(is_in_B0bar(golden::op(golden::kPhiInput), golden::kParams));
    CHECK(is_in_B0bar(Overpartition{}, golden::kParams));
    CHECK(is_in_B0bar(Overpartition::parse("3~"), golden::kParams));
    /* Every stage of the reduction run stays inside B0bar. */
    for (const char* text : {golden::kPhiStage1, golden::kPhiStage2, golden::kPhiStage3,
                             golden::kPhiMu})
        CHECK(is_in_B0bar(golden::op(text), golden::kParams));
}

TEST_CASE("B1 membership") {
    const FamilyParams reduced = golden::kParams.with_k(4); // (3,7;10,4,3)
    CHECK(is_in_B1(golden::op(golden::kPhiMu), reduced));
    CHECK(is_in_B1(Overpartition{}, reduced));
    CHECK(!is_in_B1(Overpartition::parse("10~"), reduced)); // overlined multiple of eta
}

TEST_CASE("A0bar membership, even case") {
    CHECK(is_in_A0bar(Overpartition::parse("10"), golden::kParams));  // 10 avoids 0,+-20 mod 70
    CHECK(!is_in_A0bar(Overpartition::parse("20"), golden::kParams)); // 20 == +20 mod 70
    CHECK(!is_in_A0bar(Overpartition::parse("50"), golden::kParams)); // 50 == -20 mod 70
    CHECK(!is_in_A0bar(Overpartition::parse("70"), golden::kParams)); // 70 == 0 mod 70
    CHECK(is_in_A0bar(Overpartition{}, golden::kParams));
    CHECK(is_in_A0bar(Overpartition::parse("20~"), golden::kParams)); // overlines are free
    CHECK(!is_in_A0bar(Overpartition::parse("3"), golden::kParams));  // plain non-multiple
}

TEST_CASE("A0bar membership, odd case uses half-eta residues") {
    const FamilyParams& p = golden::kParamsLambda3; // (3,5,7;10,5,4)
    /* Non-overlined parts may be multiples of 5, but not congruent to
     * 10 mod 20, nor to 0, +-25 mod 60; overlined parts must avoid
     * residue 5 mod 10. */
    CHECK(is_in_A0bar(Overpartition::parse("5"), p));
    CHECK(!is_in_A0bar(Overpartition::parse("10"), p));  // 10 mod 20
    CHECK(!is_in_A0bar(Overpartition::parse("25"), p));  // +25 mod 60
    CHECK(!is_in_A0bar(Overpartition::parse("35"), p));  // -25 mod 60
    CHECK(!is_in_A0bar(Overpartition::parse("60"), p));  // 0 mod 60
    CHECK(is_in_A0bar(Overpartition::parse("20"), p));
    CHECK(!is_in_A0bar(Overpartition::parse("5~"), p));  // overlined residue eta/2
    CHECK(is_in_A0bar(Overpartition::parse("7~"), p));
    CHECK(!is_in_A0bar(Overpartition::parse("3"), p));   // plain, not a multiple of 5
}

TEST_CASE("classical B_j membership") {
    const FamilyParams reduced = golden::kParams.with_k(4);
    CHECK(is_in_Bj_classical(Partition::parse("3"), reduced, 1));
    CHECK(is_in_Bj_classical(Partition{}, reduced, 0));
    CHECK(is_in_Bj_classical(Partition{}, reduced, 1));
    CHECK(!is_in_Bj_classical(Partition::parse("3,3"), reduced, 1)); // repeated non-multiple
}

TEST_CASE("classical A_j membership") {
    CHECK(is_in_Aj_classical(Partition::parse("7,3"), golden::kParams, 1));
    CHECK(is_in_Aj_classical(Partition{}, golden::kParams, 0));
    /* With j = 0 the forbidden congruence classes are 0, +-20 mod 80. */
    CHECK(!is_in_Aj_classical(Partition::parse("20"), golden::kParams, 0));
    CHECK(!is_in_Aj_classical(Partition::parse("60"), golden::kParams, 0)); // -20 mod 80
    CHECK(is_in_Aj_classical(Partition::parse("50"), golden::kParams, 0));
    CHECK(!is_in_Aj_classical(Partition::parse("3,3"), golden::kParams, 1));
    CHECK(is_in_Aj_classical(Partition::parse("10,10"), golden::kParams, 1));
}

TEST_CASE("Deta membership") {
    CHECK(is_in_Deta(Partition::parse("50,30,20,10"), 10));
    CHECK(is_in_Deta(Partition{}, 10));
    CHECK(!is_in_Deta(Partition::parse("20,20"), 10));
    CHECK(!is_in_Deta(Partition::parse("25,10"), 10));
}

TEST_CASE("window classification along the reduction run") {
    const Overpartition pi0 = golden::op(golden::kPhiInput);
    const Overpartition pi1 = golden::op(golden::kPhiStage1);
    CHECK(classify_window(pi0, golden::kParams, 1) == WindowClass::Equal);
    CHECK(classify_window(pi1, golden::kParams, 1) == WindowClass::Greater);
    CHECK(classify_window(pi1, golden::kParams, 2) == WindowClass::Equal);
    CHECK(classify_window(pi0, golden::kParams, 3) == WindowClass::Neither);
    CHECK_THROWS_AS(classify_window(Overpartition::parse("7"), golden::kParams, 1),
                    NotInFamilyError);
    CHECK_THROWS_AS(classify_window(pi0, golden::kParams, 0), ParamError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(is_in_Bbar(Overpartition{}, FamilyParams{{3, 6}, 10, 5, 3, 0}),
                    ParamError); // residues not symmetric
    CHECK_THROWS_AS(is_in_B0bar(Overpartition{}, FamilyParams{{3, 7}, 10, 3, 3, 0}),
                    ParamError); // k > r fails
    CHECK_THROWS_AS(is_in_B0bar(Overpartition{}, FamilyParams{{3, 5, 7}, 10, 4, 3, 0}),
                    ParamError); // k - 1 > lambda fails
    CHECK_THROWS_AS(is_in_Aj_classical(Partition{}, FamilyParams{{3, 7}, 10, 3, 3, 0}, 0),
                    ParamError); // (2k+j)/2 > r fails
    /* B1 accepts the k-1 tuple the reduction map produces. */
    CHECK(is_in_B1(Overpartition{}, FamilyParams{{3, 5, 7}, 10, 4, 4, 0}));
}

namespace {

std::vector<Overpartition> members_upto(const FamilyParams& p, int max_w,
                                        bool (*pred)(const Overpartition&, const FamilyParams&)) {
    std::vector<Overpartition> out;
    for (int n = 0; n <= max_w; ++n)
        for_each_overpartition(n, family_residues(p), p.eta, [&](const Overpartition& pi) {
            if (pred(pi, p)) out.push_back(pi);
        });
    return out;
}

/* Conditions (1)-(3) of the classical family, in plain integer arithmetic,
 * for checking the part-order machinery against it on overline-free input. */
bool classical_conditions_123(const Partition& pi, const FamilyParams& p) {
    const auto& parts = pi.parts();
    const int len = static_cast<int>(parts.size());
    for (int i = 0; i < len; ++i) {
        const int res = parts[i] % p.eta;
        bool ok = res == 0;
        for (int a : p.alphas) ok = ok || res == a;
        if (!ok) return false;
        if (res != 0) return false; // plain parts must be multiples in Bbar
    }
    for (int i = 0; i + p.k - 1 < len; ++i)
        if (parts[i] <= parts[i + p.k - 1] + p.eta) return false; // all parts are multiples
    return true;
}

} // namespace

TEST_CASE("overline-free members match the integer reading of the conditions") {
    const FamilyParams& p = golden::kParams;
    for (int n = 0; n <= 30; ++n)
        for_each_overpartition(n, family_residues(p), p.eta, [&](const Overpartition& pi) {
            bool plain_only = true;
            for (Part q : pi.parts()) plain_only = plain_only && !q.overlined;
            if (!plain_only) return;
            const Partition bare = strip_overlines(pi);
            const bool via_order = is_in_Bbar(pi, p);
            const bool via_int =
                classical_conditions_123(bare, p) && measures(pi, p.eta).f_le_eta <= p.r;
            CHECK(via_order == via_int);
        });
}

TEST_CASE("B0bar members without overlined multiples de-overline into classical B_0") {
    for (const FamilyParams& p : {golden::kParams, golden::kParamsLambda3}) {
        int seen = 0;
        for (const Overpartition& pi : members_upto(p, 30, is_in_B0bar)) {
            if (!smallest_overlined_multiple(pi, p.eta).is_inf()) continue;
            ++seen;
            CHECK(measures(pi, p.eta).f_le_eta <= p.r - 1);
            CHECK(is_in_Bj_classical(strip_overlines(pi), p, 0));
        }
        CHECK(seen > 0);
    }
}

TEST_CASE("the literal occupancy clause agrees with the s/g form") {
    for (const FamilyParams& p : {golden::kParams, golden::kParamsLambda3}) {
        for (const Overpartition& pi : members_upto(p, 30, is_in_Bbar)) {
            const ExtPart s = smallest_overlined_multiple(pi, p.eta);
            const ExtPart g = g_of(pi, p);
            bool sg_form = true;
            if (measures(pi, p.eta).f_le_eta == p.r && std::is_gt(cmp(s, over(p.eta))))
                sg_form = std::is_gteq(cmp(g, plain(p.eta))) &&
                          std::is_lt(cmp(g, over(2 * p.eta)));
            CHECK(sg_form == b0bar_condition5_literal(pi, p));
        }
    }
}

TEST_CASE("Equal at t implies Greater exactly below t") {
    const FamilyParams& p = golden::kParams;
    for (const Overpartition& pi : members_upto(p, 30, is_in_B0bar)) {
        for (int t = 2; t <= 5; ++t) {
            if (classify_window(pi, p, t) != WindowClass::Equal) continue;
            for (int u = 1; u <= t + 2; ++u) {
                const bool greater = classify_window(pi, p, u) == WindowClass::Greater;
                CHECK(greater == (u < t));
            }
        }
    }
}

TEST_CASE("every B0bar member is Equal somewhere or has no bands and no multiples") {
    const FamilyParams& p = golden::kParams;
    for (const Overpartition& pi : members_upto(p, 30, is_in_B0bar)) {
        const ExtPart s = smallest_overlined_multiple(pi, p.eta);
        const ExtPart g = g_of(pi, p);
        bool equal_somewhere = false;
        for (int t = 1; t <= 6 && !equal_somewhere; ++t)
            equal_somewhere = classify_window(pi, p, t) == WindowClass::Equal;
        CHECK(equal_somewhere != (s.is_inf() && g.is_inf()));
    }
}

TEST_CASE("classical A_0 equals B_0 on an odd-lambda tuple") {
    /* Exercises the odd-lambda, j = 0 branch, which has no worked example;
     * the counts must agree with the j = 0 congruence conditions. */
    FamilyParams p = golden::kParamsLambda3;
    p.j = 0;
    for (int n = 0; n <= 32; ++n)
        CHECK(count_family(FamilyId::Aj, p, n) == count_family(FamilyId::Bj, p, n));
}
