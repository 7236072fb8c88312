#include "bressoud/bands.hpp"

#include <string>

namespace bressoud {

namespace {

void require_valid_indices(const Overpartition& pi, Band b) {
    if (b.start < 1 || b.width < 1 ||
        static_cast<std::size_t>(b.start) + b.width - 1 > pi.length())
        throw BandError("band [start=" + std::to_string(b.start) +
                        ", width=" + std::to_string(b.width) + "] is out of range");
}

long long mod2(long long x) { return ((x % 2) + 2) % 2; }

} // namespace

bool is_band(const Overpartition& pi, Band b, int eta) {
    require_valid_indices(pi, b);
    const Part leader = pi.at1(b.start);
    const Part tail = pi.at1(b.start + b.width - 1);
    return leq(leader, shifted(tail, eta), leader.overlined);
}

std::vector<Band> find_bands(const Overpartition& pi, int m, int eta) {
    if (m < 1) throw ParamError("band width must be at least 1");
    if (eta < 1) throw ParamError("eta must be a positive integer");
    std::vector<Band> bands;
    if (pi.length() < static_cast<std::size_t>(m)) return bands;
    for (int i = 1; i + m - 1 <= static_cast<int>(pi.length()); ++i) {
        Band b{i, m};
        if (is_band(pi, b, eta)) bands.push_back(b);
    }
    return bands;
}

bool band_in_window(const Overpartition& pi, Band b, Window w, int eta) {
    require_valid_indices(pi, b);
    if (w.t < 1) throw ParamError("window index t must be at least 1");
    const Part leader = pi.at1(b.start);
    const Part tail = pi.at1(b.start + b.width - 1);
    if (!geq(tail, plain((w.t - 1) * eta), false)) return false;
    if (w.upper_open_overlined) return std::is_lt(cmp_parts(leader, over((w.t + 1) * eta)));
    return leq(leader, plain((w.t + 1) * eta), false);
}

ExtPart g_of(const Overpartition& pi, const FamilyParams& p) {
    const int m = p.k - 1;
    if (m < 1) throw ParamError("g requires k >= 2");
    const int len = static_cast<int>(pi.length());
    /* Scan leaders from the smallest part upward; the first band found has
     * the smallest leading part. */
    for (int i = len - m + 1; i >= 1; --i)
        if (is_band(pi, Band{i, m}, p.eta)) return ExtPart::of(pi.at1(i));
    return ExtPart::inf();
}

Parity band_parity(const Overpartition& pi, Band b, const FamilyParams& p) {
    if (b.width != p.k - 1)
        throw BandError("parity is defined for bands of width k - 1 = " +
                        std::to_string(p.k - 1) + ", got width " + std::to_string(b.width));
    if (!is_band(pi, b, p.eta))
        throw BandError("parts at start=" + std::to_string(b.start) + " do not form a band");
    long long sum = 0;
    for (int l = 0; l < b.width; ++l) sum += pi.at1(b.start + l).size / p.eta;
    const long long rhs = p.r - 1 + count_V(pi, pi.at1(b.start), p.eta) +
                          count_O(pi, pi.at1(b.start + b.width - 1), p.eta);
    return mod2(sum - rhs) == 0 ? Parity::Even : Parity::Odd;
}

BandType band_type(const Overpartition& mu, Band b, int t, const FamilyParams& p) {
    if (b.width != p.k - 2)
        throw BandError("type is defined for bands of width k - 2 = " +
                        std::to_string(p.k - 2) + ", got width " + std::to_string(b.width));
    if (!is_band(mu, b, p.eta))
        throw BandError("parts at start=" + std::to_string(b.start) + " do not form a band");
    if (!band_in_window(mu, b, Window{t, true}, p.eta))
        throw BandError("NoBandInWindow: band at start=" + std::to_string(b.start) +
                        " lies outside [(t-1)eta, (t+1)eta~) for t=" + std::to_string(t));
    long long sum = 0;
    for (int l = 0; l < b.width; ++l) sum += mu.at1(b.start + l).size / p.eta;
    const long long rhs = t + p.r - 1 + count_V(mu, mu.at1(b.start), p.eta) +
                          count_O(mu, mu.at1(b.start + b.width - 1), p.eta);
    return mod2(sum - rhs) == 0 ? BandType::N : BandType::O;
}

std::vector<Band> bands_in_open_window(const Overpartition& mu, int t, const FamilyParams& p) {
    std::vector<Band> out;
    if (p.k - 2 < 1) return out;
    for (Band b : find_bands(mu, p.k - 2, p.eta))
        if (band_in_window(mu, b, Window{t, true}, p.eta)) out.push_back(b);
    return out;
}

} // namespace bressoud
