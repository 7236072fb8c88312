/* Acceptance suite: end-to-end checks of the golden traces, the band
 * catalogue, every identity at weight 60, the exhaustive round trip at
 * weight 50 and the structural band/window properties at weight 40. One
 * line per criterion; exit status 0 only when everything passes. */

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bressoud/bijection.hpp"
#include "bressoud/verify.hpp"

using namespace bressoud;

namespace {

const FamilyParams kP{{3, 7}, 10, 5, 3, 0};
const FamilyParams kP3{{3, 5, 7}, 10, 5, 4, 0};
const FamilyParams kSmall{{1, 2}, 3, 4, 2, 0};

const char* kPhiInput = "60,60,53~,50~,47~,40,37~,33~,30,27~,23~,20,20~,10~,7~,3~";
const char* kPhiMu = "60,60,53~,47~,40,37~,33~,27~,23~,20,7~,3~";
const char* kPhiTau = "50,30,20,10";
const char* kBandExample =
    "80,80,80~,70,70~,67~,60,60~,55~,53~,50~,47~,45~,43~,37~,35~,"
    "27~,20,20,20~,13~,10~,7~,5~,3~";

struct Failure {
    std::string detail;
};

#define EXPECT(cond, message)                         \
    do {                                              \
        if (!(cond)) throw Failure{message};          \
    } while (0)

bool golden_trace() {
    const Overpartition pi = Overpartition::parse(kPhiInput);
    const BijectionResult f = phi(pi, kP);
    EXPECT(f.tau == Partition::parse(kPhiTau), "tau is " + f.tau.render());
    EXPECT(f.mu == Overpartition::parse(kPhiMu), "mu is " + f.mu.render());
    EXPECT(f.trace.size() == 4, "expected 4 reductions");
    const int t_seq[] = {1, 2, 3, 5};
    const TraceAction removals[] = {TraceAction::RemovedOverlined,
                                    TraceAction::RemovedOverlined, TraceAction::RemovedPlain,
                                    TraceAction::RemovedOverlined};
    for (int i = 0; i < 4; ++i) {
        EXPECT(f.trace[i].t == t_seq[i], "t-sequence mismatch at step " + std::to_string(i));
        EXPECT(f.trace[i].action == removals[i],
               "removal flag mismatch at step " + std::to_string(i));
    }
    const PsiResult back = psi(f.tau, f.mu, kP);
    EXPECT(back.pi == pi, "psi failed to invert phi");
    EXPECT(back.trace.size() == 4, "expected 4 augmentations");
    const int back_t[] = {5, 3, 2, 1};
    const TraceAction insertions[] = {TraceAction::InsertedOverlined,
                                      TraceAction::InsertedPlain,
                                      TraceAction::InsertedOverlined,
                                      TraceAction::InsertedOverlined};
    for (int i = 0; i < 4; ++i) {
        EXPECT(back.trace[i].t == back_t[i], "insertion t mismatch");
        EXPECT(back.trace[i].action == insertions[i],
               "insertion flag mismatch at step " + std::to_string(i));
    }
    return true;
}

bool golden_bands() {
    const Overpartition pi = Overpartition::parse(kBandExample);
    const std::vector<Band> bands = find_bands(pi, 4, 10);
    const int starts[] = {1, 4, 7, 9, 10, 11, 17, 18, 21, 22};
    EXPECT(bands.size() == 10, "expected ten 4-bands, got " + std::to_string(bands.size()));
    for (int i = 0; i < 10; ++i)
        EXPECT(bands[i].start == starts[i],
               "band " + std::to_string(i) + " starts at " + std::to_string(bands[i].start));
    for (int i = 0; i < 10; ++i) {
        const Parity expected = i < 6 ? Parity::Even : Parity::Odd;
        EXPECT(band_parity(pi, bands[i], kP3) == expected,
               "parity mismatch at band " + std::to_string(i));
    }
    return true;
}

bool report_passes(const VerifyReport& report) {
    if (report.overall) return true;
    std::string detail = "report " + report.identity + " failed";
    for (const std::string& w : report.witnesses) detail += "; " + w;
    throw Failure{detail};
}

bool theorem_equal_families() { // A0bar(n) == B0bar(n), n <= 60
    for (const FamilyParams& p : {kP, kP3})
        report_passes(verify_identity_parallel(IdentityKind::A0barEqB0bar, p, 0, 60));
    return true;
}

bool theorem_factorization() { // B0bar coefficients == (-q^eta;q^eta) * gf_Bj(k-1, j=1)
    for (const FamilyParams& p : {kP, kP3})
        report_passes(verify_identity_parallel(IdentityKind::B0barEqProduct, p, 0, 60));
    return true;
}

bool theorem_products() { // enumerated B_j and A0bar match their products, n <= 60
    for (const FamilyParams& p : {kP, kP3}) {
        for (int j : {0, 1})
            report_passes(verify_identity_parallel(IdentityKind::GfBj, p, j, 60));
        report_passes(verify_identity_parallel(IdentityKind::GfA0bar, p, 0, 60));
    }
    return true;
}

bool classical_identity() { // A_j(n) == B_j(n), n <= 60
    for (const FamilyParams& p : {kP, kSmall})
        for (int j : {0, 1})
            report_passes(verify_identity_parallel(IdentityKind::AjEqBj, p, j, 60));
    return true;
}

bool roundtrip_50() {
    report_passes(roundtrip_check_parallel(kP, 50));
    return true;
}

/* Structural properties of bands, windows and the two moves, exhaustively
 * over the members of weight at most 40. */
bool lemma_suite() {
    for (const FamilyParams& p : {kP, kP3}) {
        const std::set<int> residues = family_residues(p);
        for (int n = 0; n <= 40; ++n) {
            for_each_overpartition(n, residues, p.eta, [&](const Overpartition& pi) {
                if (!is_in_Bbar(pi, p)) return;
                const std::vector<Band> bands = find_bands(pi, p.k - 1, p.eta);
                /* Overlapping (k-1)-bands share a parity. */
                for (std::size_t a = 0; a < bands.size(); ++a)
                    for (std::size_t b = a + 1; b < bands.size(); ++b) {
                        if (bands[b].start > bands[a].start + p.k - 2) break;
                        EXPECT(band_parity(pi, bands[a], p) == band_parity(pi, bands[b], p),
                               "overlapping bands of distinct parity in " + pi.render());
                    }
                /* Bands inside one closed window share a parity. */
                for (int t = 1; t <= 6; ++t) {
                    const Band* first = nullptr;
                    for (const Band& b : bands) {
                        if (!band_in_window(pi, b, Window{t, false}, p.eta)) continue;
                        if (!first)
                            first = &b;
                        else
                            EXPECT(band_parity(pi, *first, p) == band_parity(pi, b, p),
                                   "same-window bands of distinct parity in " + pi.render());
                    }
                }
                if (!is_in_B0bar(pi, p)) return;
                const ExtPart s = smallest_overlined_multiple(pi, p.eta);
                const ExtPart g = g_of(pi, p);
                for (int t = 1; t <= 6; ++t) {
                    const WindowClass wc = classify_window(pi, p, t);
                    if (wc == WindowClass::Equal) {
                        /* t*eta occurs whenever the non-overlined branch of the
                         * reduction is the one that applies. */
                        if (std::is_gt(cmp(s, over(t * p.eta))))
                            EXPECT(pi.contains(plain(t * p.eta)),
                                   "t*eta absent from " + pi.render());
                        /* Reduction: window transfer, deltas, invertibility. */
                        const Overpartition mu = reduce(pi, t, p);
                        EXPECT(classify_window(mu, p, t) == WindowClass::Greater,
                               "reduce left the Greater class unreached for " + pi.render());
                        EXPECT(mu.weight() == pi.weight() - static_cast<long long>(t) * p.eta,
                               "reduce weight delta wrong for " + pi.render());
                        EXPECT(mu.length() == pi.length() - 1,
                               "reduce length delta wrong for " + pi.render());
                        EXPECT(augment(mu, t, p) == pi,
                               "augment(reduce(pi)) differs for " + pi.render());
                    } else if (wc == WindowClass::Greater) {
                        /* All windowed (k-2)-bands share one type; type O when
                         * g sits at the upper window edge. */
                        const std::vector<Band> inside = bands_in_open_window(pi, t, p);
                        if (!inside.empty()) {
                            const BandType shared = band_type(pi, inside[0], t, p);
                            for (const Band& b : inside)
                                EXPECT(band_type(pi, b, t, p) == shared,
                                       "mixed band types in " + pi.render());
                            if (!g.is_inf() && (*g.finite == over((t + 1) * p.eta) ||
                                                *g.finite == plain((t + 1) * p.eta)))
                                EXPECT(shared == BandType::O,
                                       "expected type O at the window edge in " + pi.render());
                        }
                        /* Augmentation: window transfer, deltas, invertibility. */
                        const Overpartition up = augment(pi, t, p);
                        EXPECT(classify_window(up, p, t) == WindowClass::Equal,
                               "augment left the Equal class unreached for " + pi.render());
                        EXPECT(up.weight() == pi.weight() + static_cast<long long>(t) * p.eta,
                               "augment weight delta wrong for " + pi.render());
                        EXPECT(up.length() == pi.length() + 1,
                               "augment length delta wrong for " + pi.render());
                        EXPECT(reduce(up, t, p) == pi,
                               "reduce(augment(mu)) differs for " + pi.render());
                    }
                }
            });
        }
    }
    return true;
}

struct Criterion {
    int number;
    std::string name;
    double seconds_limit;
    std::function<bool()> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden reduction/augmentation trace", 1.0, golden_trace},
        {2, "golden 4-band catalogue with parities", 1.0, golden_bands},
        {3, "equal family counts up to n = 60", 60.0, theorem_equal_families},
        {4, "factorized product matches counts up to n = 60", 60.0, theorem_factorization},
        {5, "family products match counts up to n = 60", 600.0, theorem_products},
        {6, "classical identity up to n = 60", 600.0, classical_identity},
        {7, "exhaustive round trip up to weight 50", 120.0, roundtrip_50},
        {8, "band, window and move properties up to weight 40", 600.0, lemma_suite},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = c.body();
        } catch (const Failure& f) {
            detail = f.detail;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && elapsed > c.seconds_limit) {
            ok = false;
            detail = "exceeded " + std::to_string(c.seconds_limit) + " s";
        }
        std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.name.c_str(), elapsed, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
