#pragma once

#include <optional>
#include <vector>

#include "bressoud/bands.hpp"
#include "bressoud/families.hpp"

namespace bressoud {

enum class TraceAction { RemovedOverlined, RemovedPlain, InsertedOverlined, InsertedPlain };

struct TraceStep {
    int t = 0;
    TraceAction action = TraceAction::RemovedOverlined;
    std::optional<Band> evidence; // the type-N witness backing InsertedPlain
    ExtPart s_before = ExtPart::inf();
    ExtPart g_before = ExtPart::inf();

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct BijectionResult {
    Partition tau; // distinct multiples of eta, decreasing
    Overpartition mu;
    std::vector<TraceStep> trace;
};

struct PsiResult {
    Overpartition pi;
    std::vector<TraceStep> trace;
};

struct ReduceOutcome {
    Overpartition result;
    bool removed_overlined = false;
};

struct AugmentOutcome {
    Overpartition result;
    bool inserted_overlined = false;
    std::optional<Band> witness;
};

/* Removes t*eta~ when s(pi) = t*eta~, otherwise one non-overlined copy of
 * t*eta (which must occur). Requires classify_window(pi, p, t) == Equal. */
Overpartition reduce(const Overpartition& pi, int t, const FamilyParams& p);
ReduceOutcome reduce_detailed(const Overpartition& pi, int t, const FamilyParams& p);

/* Inserts a non-overlined t*eta when some (k-2)-band inside the half-open
 * window at t has type N, otherwise t*eta~. Requires
 * classify_window(mu, p, t) == Greater. */
Overpartition augment(const Overpartition& mu, int t, const FamilyParams& p);
AugmentOutcome augment_detailed(const Overpartition& mu, int t, const FamilyParams& p);

/* Repeatedly reduces pi at t = min(floor(|s|/eta), floor(|g|/eta)) until no
 * overlined multiple of eta and no (k-1)-band remains. Returns tau (the
 * removed multiples t*eta, strictly decreasing) and the residue mu, which
 * lies in B1 with k replaced by k - 1; weights and lengths add up. Every
 * loop invariant is re-checked at runtime and violations throw. */
BijectionResult phi(const Overpartition& pi, const FamilyParams& p);

/* Inverse of phi: augments mu at the indices t_m > ... > t_1 taken from tau
 * in decreasing order. tau must lie in Deta and mu in B1 with k - 1. */
PsiResult psi(const Partition& tau, const Overpartition& mu, const FamilyParams& p);

} // namespace bressoud
