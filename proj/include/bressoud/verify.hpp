#pragma once

#include <string>
#include <vector>

#include "bressoud/enumerate.hpp"
#include "bressoud/qseries.hpp"

namespace bressoud {

enum class IdentityKind {
    A0barEqB0bar,   // enumerated A0bar(n) against enumerated B0bar(n)
    GfBj,           // enumerated B_j(n) against the product coefficients
    GfA0bar,        // enumerated A0bar(n) against the product coefficients
    B0barEqProduct, // enumerated B0bar(n) against (-q^eta; q^eta) * gf_Bj(k-1, j=1)
    AjEqBj,         // enumerated A_j(n) against enumerated B_j(n)
};

const char* identity_name(IdentityKind id);
IdentityKind identity_from_name(std::string_view name); // throws ParamError

struct PerN {
    int n = 0;
    long long lhs = 0;
    long long rhs = 0;
    bool pass = true;

    friend bool operator==(const PerN&, const PerN&) = default;
};

/* One verification run: a per-weight left/right comparison plus captured
 * counterexamples. overall is the conjunction of the per-n flags and the
 * witness list is empty exactly when overall holds. */
struct VerifyReport {
    std::string identity;
    FamilyParams params;
    int max_n = 0;
    std::vector<PerN> per_n;
    bool overall = true;
    std::vector<std::string> witnesses;

    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/* Serial reference implementations. The two sides of every identity are
 * computed independently of each other. */
VerifyReport verify_identity_serial(IdentityKind which, const FamilyParams& p, int j, int max_n);

/* Round-trip check. Per weight n, lhs counts the B0bar members (each of
 * which must satisfy psi(phi(pi)) == pi with weights, lengths and the
 * codomain families re-validated) and rhs counts the valid (tau, mu) pairs
 * of total weight n (each of which must satisfy phi(psi(tau, mu)) ==
 * (tau, mu)). A row passes when every instance round-trips and lhs == rhs. */
VerifyReport roundtrip_check_serial(const FamilyParams& p, int max_n);

/* OpenMP variants: identical reports, with the per-n work distributed over
 * threads (0 = hardware default). Without OpenMP they fall back to the
 * serial path. */
VerifyReport verify_identity_parallel(IdentityKind which, const FamilyParams& p, int j,
                                      int max_n, int threads = 0);
VerifyReport roundtrip_check_parallel(const FamilyParams& p, int max_n, int threads = 0);

} // namespace bressoud
