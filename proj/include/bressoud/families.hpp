#pragma once

#include <string_view>

#include "bressoud/overpartition.hpp"
#include "bressoud/params.hpp"

namespace bressoud {

enum class FamilyId { Aj, Bj, A0bar, Bbar, B0bar, B1, Deta };

const char* family_name(FamilyId f);
FamilyId family_from_name(std::string_view name); // throws ParamError

/* Membership in Bbar(alpha; eta, k, r): every part size is 0 or some
 * alpha_i mod eta; only multiples of eta may be non-overlined;
 * pi_i >= pi_{i+k-1} + eta for every i (strict when pi_i is non-overlined);
 * and at most r parts do not exceed eta. */
bool is_in_Bbar(const Overpartition& pi, const FamilyParams& p);

/* Bbar members whose (k-1)-bands are all even and which, when exactly r
 * parts do not exceed eta and eta~ is absent, have a (k-1)-band leader
 * inside [eta, 2eta~). */
bool is_in_B0bar(const Overpartition& pi, const FamilyParams& p);

/* The occupancy clause of is_in_B0bar read directly off its defining
 * existential (a band leader below 2eta~ must exist); retained as a
 * cross-check for the s/g formulation used by is_in_B0bar itself. */
bool b0bar_condition5_literal(const Overpartition& pi, const FamilyParams& p);

/* Bbar members with no overlined multiples of eta and at most r - 1 parts
 * not exceeding eta. */
bool is_in_B1(const Overpartition& pi, const FamilyParams& p);

bool is_in_A0bar(const Overpartition& pi, const FamilyParams& p);

bool is_in_Bj_classical(const Partition& pi, const FamilyParams& p, int j);

/* The odd-lambda, j = 0 branch has no published worked example; it is
 * implemented literally from the defining congruences and covered by the
 * cross-family count checks in the test suite. */
bool is_in_Aj_classical(const Partition& pi, const FamilyParams& p, int j);

/* Partitions with distinct parts, all divisible by eta. */
bool is_in_Deta(const Partition& tau, int eta);

enum class WindowClass { Equal, Greater, Neither };

const char* window_class_name(WindowClass w);

/* Places a B0bar member relative to the window at t >= 1:
 *
 *   Equal:   s = t*eta~ and g >= t*eta~,  or
 *            s > t*eta~ and t*eta <= g < (t+1)eta~
 *   Greater: s > t*eta~ and g >= (t+1)eta~
 *
 * Equivalently, Equal holds iff min(floor(|s|/eta), floor(|g|/eta)) = t and
 * Greater iff that minimum is at least t + 1. Throws NotInFamilyError when
 * pi is not in B0bar. */
WindowClass classify_window(const Overpartition& pi, const FamilyParams& p, int t);

} // namespace bressoud
