#pragma once

#include <vector>

#include "bressoud/overpartition.hpp"
#include "bressoud/params.hpp"

namespace bressoud {

/* m consecutive parts pi_i, ..., pi_{i+m-1} form an m-band when
 * pi_i <= pi_{i+m-1} + eta, with strict inequality when pi_i is overlined.
 * start is the 1-based index i of the leading (largest) part. */
struct Band {
    int start = 1;
    int width = 1;

    friend bool operator==(const Band&, const Band&) = default;
};

/* The window at t: [(t-1)eta, (t+1)eta] closed, or [(t-1)eta, (t+1)eta~)
 * with the overlined upper endpoint excluded. Both endpoints are compared
 * in the part order; the bounds (t-1)eta and (t+1)eta are non-overlined. */
struct Window {
    int t = 1;
    bool upper_open_overlined = false;
};

bool is_band(const Overpartition& pi, Band b, int eta);

/* All m-bands of pi, by ascending start index. */
std::vector<Band> find_bands(const Overpartition& pi, int m, int eta);

/* Membership: pi_{i+m-1} >= (t-1)eta and pi_i <= (t+1)eta (closed) or
 * pi_i < (t+1)eta~ (open variant). */
bool band_in_window(const Overpartition& pi, Band b, Window w, int eta);

/* g(pi): the smallest leading part of any (k-1)-band, or infinity. */
ExtPart g_of(const Overpartition& pi, const FamilyParams& p);

enum class Parity { Even, Odd };

/* Parity of a band of width exactly k - 1:
 *
 *   even  iff  sum_l floor(|pi_{i+l}| / eta)
 *                = r - 1 + V(pi_i) + O(pi_{i+k-2})   (mod 2)
 *
 * where V counts the overlined non-multiples of eta not exceeding the band
 * leader and O counts the overlined multiples of eta at or above the band
 * tail. Bands of any other width are rejected. */
Parity band_parity(const Overpartition& pi, Band b, const FamilyParams& p);

enum class BandType { N, O };

/* Type of a band of width exactly k - 2 lying inside the half-open window
 * at t:
 *
 *   N  iff  sum_l floor(|mu_{i+l}| / eta)
 *             = t + r - 1 + V(mu_i) + O(mu_{i+k-3})   (mod 2)
 *
 * Bands of any other width, or outside the window, are rejected. */
BandType band_type(const Overpartition& mu, Band b, int t, const FamilyParams& p);

/* The (k-2)-bands of mu inside [(t-1)eta, (t+1)eta~), ascending start. */
std::vector<Band> bands_in_open_window(const Overpartition& mu, int t, const FamilyParams& p);

} // namespace bressoud
