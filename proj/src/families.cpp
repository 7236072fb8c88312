#include "bressoud/families.hpp"

#include <map>
#include <string>

#include "bressoud/bands.hpp"

namespace bressoud {

namespace {

long long mod(long long x, long long m) { return ((x % m) + m) % m; }

/* x == c or x == -c modulo m. */
bool congruent_pm(long long x, long long c, long long m) {
    return mod(x, m) == mod(c, m) || mod(x, m) == mod(-c, m);
}

bool residue_allowed(int size, const FamilyParams& p) {
    const int res = size % p.eta;
    if (res == 0) return true;
    for (int a : p.alphas)
        if (res == a) return true;
    return false;
}

} // namespace

const char* family_name(FamilyId f) {
    switch (f) {
        case FamilyId::Aj: return "Aj";
        case FamilyId::Bj: return "Bj";
        case FamilyId::A0bar: return "A0bar";
        case FamilyId::Bbar: return "Bbar";
        case FamilyId::B0bar: return "B0bar";
        case FamilyId::B1: return "B1";
        case FamilyId::Deta: return "Deta";
    }
    return "?";
}

FamilyId family_from_name(std::string_view name) {
    static const std::map<std::string_view, FamilyId> table = {
        {"Aj", FamilyId::Aj},       {"Bj", FamilyId::Bj}, {"A0bar", FamilyId::A0bar},
        {"Bbar", FamilyId::Bbar},   {"B0bar", FamilyId::B0bar},
        {"B1", FamilyId::B1},       {"Deta", FamilyId::Deta},
    };
    auto it = table.find(name);
    if (it == table.end()) throw ParamError("unknown family '" + std::string(name) + "'");
    return it->second;
}

const char* window_class_name(WindowClass w) {
    switch (w) {
        case WindowClass::Equal: return "equal";
        case WindowClass::Greater: return "greater";
        case WindowClass::Neither: return "neither";
    }
    return "?";
}

bool is_in_Bbar(const Overpartition& pi, const FamilyParams& p) {
    validate_bbar_params(p);
    for (Part q : pi.parts()) {
        if (!residue_allowed(q.size, p)) return false;
        if (!q.overlined && q.size % p.eta != 0) return false;
    }
    const int len = static_cast<int>(pi.length());
    for (int i = 1; i + p.k - 1 <= len; ++i) {
        const Part a = pi.at1(i);
        if (!geq(a, shifted(pi.at1(i + p.k - 1), p.eta), !a.overlined)) return false;
    }
    return measures(pi, p.eta).f_le_eta <= p.r;
}

bool b0bar_condition5_literal(const Overpartition& pi, const FamilyParams& p) {
    validate_b0bar_params(p);
    if (measures(pi, p.eta).f_le_eta != p.r) return true;
    if (pi.contains(over(p.eta))) return true;
    const int len = static_cast<int>(pi.length());
    for (int i = 1; i + p.k - 2 <= len; ++i) {
        const Part leader = pi.at1(i);
        if (std::is_lt(cmp_parts(leader, over(2 * p.eta))) &&
            leq(leader, shifted(pi.at1(i + p.k - 2), p.eta), leader.overlined))
            return true;
    }
    return false;
}

bool is_in_B0bar(const Overpartition& pi, const FamilyParams& p) {
    validate_b0bar_params(p);
    if (!is_in_Bbar(pi, p)) return false;
    for (Band b : find_bands(pi, p.k - 1, p.eta))
        if (band_parity(pi, b, p) == Parity::Odd) return false;
    /* Occupancy clause, in the s/g form: when exactly r parts do not exceed
     * eta and eta~ is absent, some (k-1)-band leader must lie in
     * [eta, 2eta~). */
    if (measures(pi, p.eta).f_le_eta == p.r) {
        const ExtPart s = smallest_overlined_multiple(pi, p.eta);
        if (std::is_gt(cmp(s, over(p.eta)))) {
            const ExtPart g = g_of(pi, p);
            if (!(std::is_gteq(cmp(g, plain(p.eta))) && std::is_lt(cmp(g, over(2 * p.eta)))))
                return false;
        }
    }
    return true;
}

bool is_in_B1(const Overpartition& pi, const FamilyParams& p) {
    validate_bbar_params(p);
    if (!is_in_Bbar(pi, p)) return false;
    if (!smallest_overlined_multiple(pi, p.eta).is_inf()) return false;
    return measures(pi, p.eta).f_le_eta <= p.r - 1;
}

bool is_in_A0bar(const Overpartition& pi, const FamilyParams& p) {
    validate_b0bar_params(p);
    const int lam = p.lambda();
    for (Part q : pi.parts())
        if (!residue_allowed(q.size, p)) return false;
    if (lam % 2 == 0) {
        const long long m = static_cast<long long>(p.eta) * (2 * p.k - lam - 1);
        const long long c = static_cast<long long>(p.eta) * (2 * p.r - lam) / 2;
        for (Part q : pi.parts()) {
            if (q.overlined) continue;
            if (q.size % p.eta != 0) return false;
            if (mod(q.size, m) == 0 || congruent_pm(q.size, c, m)) return false;
        }
    } else {
        const int half = p.eta / 2;
        const long long m = static_cast<long long>(p.eta) * (2 * p.k - lam - 1);
        const long long c = static_cast<long long>(p.eta) * (2 * p.r - lam) / 2;
        for (Part q : pi.parts()) {
            if (q.overlined) {
                if (q.size % p.eta == half) return false;
                continue;
            }
            if (q.size % half != 0) return false;
            if (mod(q.size, 2 * p.eta) == p.eta) return false;
            if (mod(q.size, m) == 0 || congruent_pm(q.size, c, m)) return false;
        }
    }
    return true;
}

bool is_in_Bj_classical(const Partition& pi, const FamilyParams& p, int j) {
    validate_classical_bj_params(p, j);
    const auto& parts = pi.parts();
    const int len = static_cast<int>(parts.size());
    int below_eta = 0;
    for (int i = 0; i < len; ++i) {
        if (!residue_allowed(parts[i], p)) return false;
        if (i + 1 < len && parts[i] == parts[i + 1] && parts[i] % p.eta != 0) return false;
        if (parts[i] <= p.eta) ++below_eta;
    }
    if (below_eta > p.r - 1) return false;
    for (int i = 0; i + p.k - 1 < len; ++i) {
        const int tail = parts[i + p.k - 1] + p.eta;
        if (parts[i] % p.eta == 0 ? parts[i] <= tail : parts[i] < tail) return false;
    }
    if (j == 1) return true; // the congruence is mod 1
    for (int i = 0; i + p.k - 2 < len; ++i) {
        const int head = parts[i];
        const int tail = parts[i + p.k - 2] + p.eta;
        const bool triggered = head % p.eta == 0 ? head <= tail : head < tail;
        if (!triggered) continue;
        long long sum = 0;
        for (int l = 0; l < p.k - 1; ++l) sum += parts[i + l] / p.eta;
        long long v = 0;
        for (int x : parts)
            if (x <= head && x % p.eta != 0) ++v;
        if (mod(sum - (p.r - 1 + v), 2) != 0) return false;
    }
    return true;
}

bool is_in_Aj_classical(const Partition& pi, const FamilyParams& p, int j) {
    validate_classical_aj_params(p, j);
    const int lam = p.lambda();
    const auto& parts = pi.parts();
    const int len = static_cast<int>(parts.size());
    auto repeated = [&](int i) { return i + 1 < len && parts[i] == parts[i + 1]; };
    for (int i = 0; i < len; ++i)
        if (!residue_allowed(parts[i], p)) return false;
    if (lam % 2 == 0) {
        const long long m = static_cast<long long>(p.eta) * (2 * p.k - lam + j);
        const long long c = static_cast<long long>(p.eta) * (2 * p.r - lam) / 2;
        for (int i = 0; i < len; ++i) {
            if (repeated(i) && parts[i] % p.eta != 0) return false;
            if (mod(parts[i], m) == 0 || congruent_pm(parts[i], c, m)) return false;
        }
        return true;
    }
    const int half = p.eta / 2;
    const long long c = static_cast<long long>(p.eta) * (2 * p.r - lam) / 2;
    if (j == 1) {
        const long long m = static_cast<long long>(p.eta) * (2 * p.k - lam + 1);
        for (int i = 0; i < len; ++i) {
            if (repeated(i) && parts[i] % half != 0) return false;
            if (mod(parts[i], 2 * p.eta) == p.eta) return false;
            if (mod(parts[i], m) == 0 || congruent_pm(parts[i], c, m)) return false;
        }
        return true;
    }
    const long long m0 = static_cast<long long>(p.eta) * (2 * p.k - lam);
    for (int i = 0; i < len; ++i) {
        if (repeated(i) && (parts[i] % half != 0 || mod(parts[i], m0) == m0 / 2)) return false;
        if (mod(parts[i], 2 * p.eta) == p.eta) return false;
        if (mod(parts[i], 2 * m0) == 0) return false;
        if (congruent_pm(parts[i], c, m0)) return false;
    }
    return true;
}

bool is_in_Deta(const Partition& tau, int eta) {
    if (eta < 1) throw ParamError("eta must be a positive integer");
    const auto& parts = tau.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] % eta != 0) return false;
        if (i + 1 < parts.size() && parts[i] == parts[i + 1]) return false;
    }
    return true;
}

WindowClass classify_window(const Overpartition& pi, const FamilyParams& p, int t) {
    validate_b0bar_params(p);
    if (t < 1) throw ParamError("window index t must be at least 1");
    if (!is_in_B0bar(pi, p))
        throw NotInFamilyError("classify_window: overpartition '" + pi.render() +
                               "' is not in B0bar");
    const ExtPart s = smallest_overlined_multiple(pi, p.eta);
    const ExtPart g = g_of(pi, p);
    const Part t_over = over(t * p.eta);
    const Part t_plain = plain(t * p.eta);
    const Part next_over = over((t + 1) * p.eta);
    const bool s_at_t = !s.is_inf() && *s.finite == t_over;
    if ((s_at_t && std::is_gteq(cmp(g, t_over))) ||
        (std::is_gt(cmp(s, t_over)) && std::is_gteq(cmp(g, t_plain)) &&
         std::is_lt(cmp(g, next_over))))
        return WindowClass::Equal;
    if (std::is_gt(cmp(s, t_over)) && std::is_gteq(cmp(g, next_over)))
        return WindowClass::Greater;
    return WindowClass::Neither;
}

} // namespace bressoud
