#include "bressoud/bijection.hpp"

#include <algorithm>
#include <string>

namespace bressoud {

ReduceOutcome reduce_detailed(const Overpartition& pi, int t, const FamilyParams& p) {
    validate_bijection_params(p);
    if (t < 1) throw ParamError("window index t must be at least 1");
    if (classify_window(pi, p, t) != WindowClass::Equal)
        throw WindowMismatch("reduce at t=" + std::to_string(t) +
                             " requires the Equal window class, got " +
                             window_class_name(classify_window(pi, p, t)));
    const ExtPart s = smallest_overlined_multiple(pi, p.eta);
    const Part target =
        (!s.is_inf() && *s.finite == over(t * p.eta)) ? over(t * p.eta) : plain(t * p.eta);
    std::vector<Part> parts = pi.parts();
    auto it = std::find(parts.begin(), parts.end(), target);
    if (it == parts.end())
        throw Error("reduce: required part " + render_part(target) + " is absent from '" +
                    pi.render() + "'");
    parts.erase(it);
    return {Overpartition::from_canonical(std::move(parts)), target.overlined};
}

Overpartition reduce(const Overpartition& pi, int t, const FamilyParams& p) {
    return reduce_detailed(pi, t, p).result;
}

AugmentOutcome augment_detailed(const Overpartition& mu, int t, const FamilyParams& p) {
    validate_bijection_params(p);
    if (t < 1) throw ParamError("window index t must be at least 1");
    if (classify_window(mu, p, t) != WindowClass::Greater)
        throw WindowMismatch("augment at t=" + std::to_string(t) +
                             " requires the Greater window class, got " +
                             window_class_name(classify_window(mu, p, t)));
    std::optional<Band> witness;
    for (Band b : bands_in_open_window(mu, t, p)) {
        if (band_type(mu, b, t, p) == BandType::N) {
            witness = b;
            break;
        }
    }
    const Part inserted = witness ? plain(t * p.eta) : over(t * p.eta);
    std::vector<Part> parts = mu.parts();
    auto pos = std::find_if(parts.begin(), parts.end(),
                            [&](Part q) { return std::is_lt(cmp_parts(q, inserted)); });
    parts.insert(pos, inserted);
    return {Overpartition::from_canonical(std::move(parts)), !witness.has_value(), witness};
}

Overpartition augment(const Overpartition& mu, int t, const FamilyParams& p) {
    return augment_detailed(mu, t, p).result;
}

BijectionResult phi(const Overpartition& pi, const FamilyParams& p) {
    validate_bijection_params(p);
    if (!is_in_B0bar(pi, p))
        throw NotInFamilyError("phi: overpartition '" + pi.render() + "' is not in B0bar");
    Overpartition cur = pi;
    std::vector<int> tau_parts;
    std::vector<TraceStep> trace;
    long long prev_t = 0;
    const std::size_t max_steps = pi.length();
    while (true) {
        const ExtPart s = smallest_overlined_multiple(cur, p.eta);
        const ExtPart g = g_of(cur, p);
        if (s.is_inf() && g.is_inf()) break;
        if (trace.size() >= max_steps)
            throw Error("phi: more reductions than parts; loop invariant broken");
        const auto fs = floor_size_div(s, p.eta);
        const auto fg = floor_size_div(g, p.eta);
        long long t;
        if (fs && fg)
            t = std::min(*fs, *fg);
        else
            t = fs ? *fs : *fg;
        if (t <= prev_t)
            throw Error("phi: reduction index " + std::to_string(t) +
                        " did not increase past " + std::to_string(prev_t));
        ReduceOutcome out = reduce_detailed(cur, static_cast<int>(t), p);
        trace.push_back({static_cast<int>(t),
                         out.removed_overlined ? TraceAction::RemovedOverlined
                                               : TraceAction::RemovedPlain,
                         std::nullopt, s, g});
        tau_parts.push_back(static_cast<int>(t) * p.eta);
        cur = std::move(out.result);
        prev_t = t;
    }
    std::reverse(tau_parts.begin(), tau_parts.end());
    Partition tau = Partition::from_parts(std::move(tau_parts));
    if (!is_in_B1(cur, p.with_k(p.k - 1)))
        throw Error("phi: residue '" + cur.render() + "' escaped B1 with k - 1");
    if (pi.weight() != tau.weight() + cur.weight() ||
        pi.length() != tau.length() + cur.length())
        throw Error("phi: weight/length additivity violated");
    return {std::move(tau), std::move(cur), std::move(trace)};
}

PsiResult psi(const Partition& tau, const Overpartition& mu, const FamilyParams& p) {
    validate_bijection_params(p);
    if (!is_in_Deta(tau, p.eta))
        throw NotInFamilyError("psi: '" + tau.render() + "' is not in Deta");
    if (!is_in_B1(mu, p.with_k(p.k - 1)))
        throw NotInFamilyError("psi: '" + mu.render() + "' is not in B1 with k - 1");
    Overpartition cur = mu;
    std::vector<TraceStep> trace;
    for (int part : tau.parts()) { // decreasing, so t_m first
        const int t = part / p.eta;
        const ExtPart s = smallest_overlined_multiple(cur, p.eta);
        const ExtPart g = g_of(cur, p);
        AugmentOutcome out = augment_detailed(cur, t, p);
        trace.push_back({t,
                         out.inserted_overlined ? TraceAction::InsertedOverlined
                                                : TraceAction::InsertedPlain,
                         out.witness, s, g});
        cur = std::move(out.result);
    }
    if (!is_in_B0bar(cur, p))
        throw Error("psi: result '" + cur.render() + "' escaped B0bar");
    if (cur.weight() != tau.weight() + mu.weight() ||
        cur.length() != tau.length() + mu.length())
        throw Error("psi: weight/length additivity violated");
    return {std::move(cur), std::move(trace)};
}

} // namespace bressoud
