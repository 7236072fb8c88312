#include "bressoud/verify.hpp"

#include <map>
#include <optional>
#include <string>

#include "bressoud/bijection.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bressoud {

namespace {

struct NResult {
    PerN row;
    std::vector<std::string> witnesses;
};

void validate_identity_params(IdentityKind which, const FamilyParams& p, int j) {
    switch (which) {
        case IdentityKind::A0barEqB0bar:
        case IdentityKind::GfA0bar:
        case IdentityKind::B0barEqProduct:
            validate_b0bar_params(p);
            break;
        case IdentityKind::GfBj:
            validate_classical_bj_params(p, j);
            break;
        case IdentityKind::AjEqBj:
            validate_classical_aj_params(p, j);
            validate_classical_bj_params(p, j);
            break;
    }
}

std::optional<TruncatedSeries> build_rhs_series(IdentityKind which, const FamilyParams& p,
                                                int j, int max_n) {
    switch (which) {
        case IdentityKind::GfBj:
            return gf_Bj(p, j, max_n);
        case IdentityKind::GfA0bar:
            return gf_A0bar(p, max_n);
        case IdentityKind::B0barEqProduct:
            return series_mul(product_factor(+1, p.eta, p.eta, max_n),
                              gf_Bj(p.with_k(p.k - 1), 1, max_n));
        default:
            return std::nullopt;
    }
}

NResult identity_at_n(IdentityKind which, const FamilyParams& p, int j,
                      const std::optional<TruncatedSeries>& rhs_series, int n) {
    long long lhs = 0;
    long long rhs = 0;
    FamilyParams q = p;
    q.j = j;
    switch (which) {
        case IdentityKind::A0barEqB0bar:
            lhs = count_family(FamilyId::A0bar, p, n);
            rhs = count_family(FamilyId::B0bar, p, n);
            break;
        case IdentityKind::GfBj:
            lhs = count_family(FamilyId::Bj, q, n);
            rhs = rhs_series->coeff(n);
            break;
        case IdentityKind::GfA0bar:
            lhs = count_family(FamilyId::A0bar, p, n);
            rhs = rhs_series->coeff(n);
            break;
        case IdentityKind::B0barEqProduct:
            lhs = count_family(FamilyId::B0bar, p, n);
            rhs = rhs_series->coeff(n);
            break;
        case IdentityKind::AjEqBj:
            lhs = count_family(FamilyId::Aj, q, n);
            rhs = count_family(FamilyId::Bj, q, n);
            break;
    }
    NResult res{{n, lhs, rhs, lhs == rhs}, {}};
    if (!res.row.pass)
        res.witnesses.push_back("n=" + std::to_string(n) + ": lhs=" + std::to_string(lhs) +
                                " rhs=" + std::to_string(rhs));
    return res;
}

struct RoundtripContext {
    FamilyParams p;
    FamilyParams q; // p with k - 1
    std::vector<std::vector<Partition>> tau_by_weight;
    std::vector<std::vector<Overpartition>> mu_by_weight;
};

RoundtripContext make_roundtrip_context(const FamilyParams& p, int max_n) {
    RoundtripContext ctx{p, p.with_k(p.k - 1), {}, {}};
    ctx.tau_by_weight.resize(static_cast<std::size_t>(max_n) + 1);
    ctx.mu_by_weight.resize(static_cast<std::size_t>(max_n) + 1);
    const std::set<int> residues = family_residues(p);
    for (int w = 0; w <= max_n; ++w) {
        for_each_partition(w, {0}, p.eta, [&](const Partition& tau) {
            if (is_in_Deta(tau, p.eta)) ctx.tau_by_weight[w].push_back(tau);
        });
        for_each_overpartition(w, residues, p.eta, [&](const Overpartition& mu) {
            if (is_in_B1(mu, ctx.q)) ctx.mu_by_weight[w].push_back(mu);
        });
    }
    return ctx;
}

NResult roundtrip_at_n(const RoundtripContext& ctx, int n) {
    NResult res;
    res.row.n = n;
    long long forward = 0;
    long long backward = 0;
    auto& wit = res.witnesses;
    for_each_overpartition(n, family_residues(ctx.p), ctx.p.eta, [&](const Overpartition& pi) {
        if (!is_in_B0bar(pi, ctx.p)) return;
        ++forward;
        try {
            BijectionResult f = phi(pi, ctx.p);
            if (!is_in_Deta(f.tau, ctx.p.eta))
                wit.push_back("pi=" + pi.render() + ": tau=" + f.tau.render() + " not in Deta");
            if (!is_in_B1(f.mu, ctx.q))
                wit.push_back("pi=" + pi.render() + ": mu=" + f.mu.render() +
                              " not in B1 with k - 1");
            if (pi.weight() != f.tau.weight() + f.mu.weight() ||
                pi.length() != f.tau.length() + f.mu.length())
                wit.push_back("pi=" + pi.render() + ": weight/length additivity failed");
            PsiResult back = psi(f.tau, f.mu, ctx.p);
            if (!(back.pi == pi))
                wit.push_back("pi=" + pi.render() + ": psi(phi(pi))=" + back.pi.render());
        } catch (const Error& e) {
            wit.push_back("pi=" + pi.render() + ": " + e.what());
        }
    });
    for (int w = 0; w <= n; ++w) {
        for (const Partition& tau : ctx.tau_by_weight[w]) {
            for (const Overpartition& mu : ctx.mu_by_weight[n - w]) {
                ++backward;
                try {
                    PsiResult ps = psi(tau, mu, ctx.p);
                    BijectionResult f = phi(ps.pi, ctx.p);
                    if (!(f.tau == tau && f.mu == mu))
                        wit.push_back("tau=" + tau.render() + " mu=" + mu.render() +
                                      ": phi(psi)=(" + f.tau.render() + " | " + f.mu.render() +
                                      ")");
                } catch (const Error& e) {
                    wit.push_back("tau=" + tau.render() + " mu=" + mu.render() + ": " + e.what());
                }
            }
        }
    }
    if (forward != backward)
        wit.push_back("n=" + std::to_string(n) + ": " + std::to_string(forward) +
                      " members against " + std::to_string(backward) + " pairs");
    res.row.lhs = forward;
    res.row.rhs = backward;
    res.row.pass = wit.empty();
    return res;
}

VerifyReport assemble(const std::string& identity, const FamilyParams& p, int max_n,
                      const std::function<NResult(int)>& worker, bool parallel, int threads) {
    std::vector<NResult> slots(static_cast<std::size_t>(max_n) + 1);
    if (parallel) {
#ifdef _OPENMP
        const int nthreads = threads > 0 ? threads : omp_get_max_threads();
        /* Costs grow steeply with n; hand out the heavy weights first. */
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (int idx = 0; idx <= max_n; ++idx) {
            const int n = max_n - idx;
            try {
                slots[n] = worker(n);
            } catch (const std::exception& e) {
                slots[n] = NResult{{n, -1, -1, false}, {std::string("error: ") + e.what()}};
            }
        }
#else
        (void)threads;
        for (int n = 0; n <= max_n; ++n) slots[n] = worker(n);
#endif
    } else {
        for (int n = 0; n <= max_n; ++n) slots[n] = worker(n);
    }
    VerifyReport report;
    report.identity = identity;
    report.params = p;
    report.max_n = max_n;
    for (NResult& r : slots) {
        report.per_n.push_back(r.row);
        report.overall = report.overall && r.row.pass;
        for (std::string& w : r.witnesses) report.witnesses.push_back(std::move(w));
    }
    return report;
}

VerifyReport run_identity(IdentityKind which, const FamilyParams& p, int j, int max_n,
                          bool parallel, int threads) {
    if (max_n < 0) throw ParamError("max_n must be non-negative");
    validate_identity_params(which, p, j);
    const std::optional<TruncatedSeries> rhs = build_rhs_series(which, p, j, max_n);
    auto worker = [&](int n) { return identity_at_n(which, p, j, rhs, n); };
    return assemble(identity_name(which), p, max_n, worker, parallel, threads);
}

VerifyReport run_roundtrip(const FamilyParams& p, int max_n, bool parallel, int threads) {
    if (max_n < 0) throw ParamError("max_n must be non-negative");
    validate_bijection_params(p);
    const RoundtripContext ctx = make_roundtrip_context(p, max_n);
    auto worker = [&](int n) { return roundtrip_at_n(ctx, n); };
    return assemble("roundtrip", p, max_n, worker, parallel, threads);
}

} // namespace

const char* identity_name(IdentityKind id) {
    switch (id) {
        case IdentityKind::A0barEqB0bar: return "A0bar_eq_B0bar";
        case IdentityKind::GfBj: return "gfBj";
        case IdentityKind::GfA0bar: return "gfA0bar";
        case IdentityKind::B0barEqProduct: return "B0bar_eq_product";
        case IdentityKind::AjEqBj: return "Aj_eq_Bj";
    }
    return "?";
}

IdentityKind identity_from_name(std::string_view name) {
    static const std::map<std::string_view, IdentityKind> table = {
        {"A0bar_eq_B0bar", IdentityKind::A0barEqB0bar},
        {"gfBj", IdentityKind::GfBj},
        {"gfA0bar", IdentityKind::GfA0bar},
        {"B0bar_eq_product", IdentityKind::B0barEqProduct},
        {"Aj_eq_Bj", IdentityKind::AjEqBj},
    };
    auto it = table.find(name);
    if (it == table.end()) throw ParamError("unknown identity '" + std::string(name) + "'");
    return it->second;
}

VerifyReport verify_identity_serial(IdentityKind which, const FamilyParams& p, int j,
                                    int max_n) {
    return run_identity(which, p, j, max_n, false, 0);
}

VerifyReport verify_identity_parallel(IdentityKind which, const FamilyParams& p, int j,
                                      int max_n, int threads) {
    return run_identity(which, p, j, max_n, true, threads);
}

VerifyReport roundtrip_check_serial(const FamilyParams& p, int max_n) {
    return run_roundtrip(p, max_n, false, 0);
}

VerifyReport roundtrip_check_parallel(const FamilyParams& p, int max_n, int threads) {
    return run_roundtrip(p, max_n, true, threads);
}

} // namespace bressoud
