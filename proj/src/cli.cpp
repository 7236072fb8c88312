#include "bressoud/cli.hpp"

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "bressoud/serialize.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bressoud {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct CommonOpts {
    std::vector<int> alphas;
    int eta = 10;
    int k = 5;
    int r = 3;
    int j = -1; // -1 = not given
    int max_n = 40;
    std::string format = "plain";
    int threads = 0;

    FamilyParams params() const {
        FamilyParams p{alphas, eta, k, r, j < 0 ? 0 : j};
        return p;
    }
};

void add_param_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--alpha", opts.alphas,
                    "residues alpha_1,...,alpha_lambda (may be empty)")
        ->delimiter(',');
    cmd->add_option("--eta", opts.eta, "modulus eta")->required();
    cmd->add_option("--k", opts.k, "parameter k")->required();
    cmd->add_option("--r", opts.r, "parameter r")->required();
}

void add_format_flag(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
}

void add_threads_flag(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--threads", opts.threads, "worker threads (0 = all cores)")
        ->envname("BRESSOUD_THREADS");
}

int require_j(const CommonOpts& opts, std::ostream& err) {
    if (opts.j != 0 && opts.j != 1) {
        err << "error: this command needs --j 0 or --j 1\n";
        return -1;
    }
    return opts.j;
}

void print_report_plain(const VerifyReport& report, std::ostream& out) {
    out << "identity: " << report.identity << "\n";
    out << std::setw(6) << "n" << std::setw(12) << "lhs" << std::setw(12) << "rhs"
        << std::setw(8) << "pass" << "\n";
    for (const PerN& row : report.per_n)
        out << std::setw(6) << row.n << std::setw(12) << row.lhs << std::setw(12) << row.rhs
            << std::setw(8) << (row.pass ? "yes" : "NO") << "\n";
    out << "overall: " << (report.overall ? "PASS" : "FAIL") << "\n";
    for (const std::string& w : report.witnesses) out << "witness: " << w << "\n";
}

int emit_report(const VerifyReport& report, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << report_to_json(report).dump(2) << "\n";
    else if (format == "csv")
        out << report_to_csv(report);
    else
        print_report_plain(report, out);
    return report.overall ? kExitOk : kExitVerifyFailed;
}

int run_count(const CommonOpts& opts, const std::string& family, std::ostream& out,
              std::ostream& err) {
    const FamilyId id = family_from_name(family);
    FamilyParams p = opts.params();
    if ((id == FamilyId::Aj || id == FamilyId::Bj) && require_j(opts, err) < 0)
        return kExitBadInput;
    std::vector<long long> counts(static_cast<std::size_t>(opts.max_n) + 1, 0);
    count_family(id, p, 0); // validate parameters before spawning workers
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads > 0 ? opts.threads : omp_get_max_threads())
#endif
    for (int n = 0; n <= opts.max_n; ++n) counts[n] = count_family(id, p, n);
    if (opts.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int n = 0; n <= opts.max_n; ++n)
            rows.push_back({{"count", counts[n]}, {"n", n}});
        nlohmann::json doc{{"family", family},
                           {"max_n", opts.max_n},
                           {"params", params_to_json(p)},
                           {"counts", rows}};
        out << doc.dump(2) << "\n";
    } else if (opts.format == "csv") {
        out << "n,count\n";
        for (int n = 0; n <= opts.max_n; ++n)
            out << n << "," << counts[n] << "\n";
    } else {
        out << std::setw(6) << "n" << std::setw(12) << "count" << "\n";
        for (int n = 0; n <= opts.max_n; ++n)
            out << std::setw(6) << n << std::setw(12) << counts[n] << "\n";
    }
    return kExitOk;
}

int run_verify(const CommonOpts& opts, const std::string& which, std::ostream& out,
               std::ostream& err) {
    IdentityKind kind;
    if (which == "main")
        kind = IdentityKind::A0barEqB0bar;
    else if (which == "factor")
        kind = IdentityKind::B0barEqProduct;
    else if (which == "classical")
        kind = IdentityKind::AjEqBj;
    else if (which == "gfA0bar")
        kind = IdentityKind::GfA0bar;
    else if (which == "gfBj")
        kind = IdentityKind::GfBj;
    else
        kind = identity_from_name(which);
    int j = 0;
    if (kind == IdentityKind::GfBj || kind == IdentityKind::AjEqBj) {
        j = require_j(opts, err);
        if (j < 0) return kExitBadInput;
    }
    const VerifyReport report =
        verify_identity_parallel(kind, opts.params(), j, opts.max_n, opts.threads);
    return emit_report(report, opts.format, out);
}

int run_bands(const CommonOpts& opts, const std::string& pi_text, int m, int t_flag,
              bool windows, std::ostream& out) {
    const FamilyParams p = opts.params();
    validate_bbar_params(p);
    const Overpartition pi = Overpartition::parse(pi_text);
    const std::vector<Band> bands = find_bands(pi, m, p.eta);
    auto window_lists = [&](Band b) {
        std::pair<std::vector<int>, std::vector<int>> lists;
        const int t_max = pi.at1(b.start).size / p.eta + 1;
        for (int t = 1; t <= t_max; ++t) {
            if (band_in_window(pi, b, Window{t, false}, p.eta)) lists.first.push_back(t);
            if (band_in_window(pi, b, Window{t, true}, p.eta)) lists.second.push_back(t);
        }
        return lists;
    };
    auto band_parts = [&](Band b) {
        std::string s;
        for (int l = 0; l < b.width; ++l) {
            if (l > 0) s += ',';
            s += render_part(pi.at1(b.start + l));
        }
        return s;
    };
    const bool with_parity = m == p.k - 1;
    const bool with_type = m == p.k - 2 && t_flag >= 1;
    if (opts.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (Band b : bands) {
            nlohmann::json row{{"start", b.start}, {"width", b.width}, {"parts", band_parts(b)}};
            if (with_parity)
                row["parity"] = band_parity(pi, b, p) == Parity::Even ? "even" : "odd";
            if (with_type && band_in_window(pi, b, Window{t_flag, true}, p.eta))
                row["type"] = band_type(pi, b, t_flag, p) == BandType::N ? "N" : "O";
            if (windows) {
                auto [closed, open] = window_lists(b);
                row["windows_closed"] = closed;
                row["windows_open"] = open;
            }
            rows.push_back(row);
        }
        nlohmann::json doc{{"pi", pi.render()}, {"m", m}, {"bands", rows}};
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    if (opts.format == "csv") {
        out << "start,width,parts" << (with_parity ? ",parity" : "")
            << (with_type ? ",type" : "") << "\n";
        for (Band b : bands) {
            out << b.start << "," << b.width << ",\"" << band_parts(b) << "\"";
            if (with_parity)
                out << "," << (band_parity(pi, b, p) == Parity::Even ? "even" : "odd");
            if (with_type)
                out << ","
                    << (band_in_window(pi, b, Window{t_flag, true}, p.eta)
                            ? (band_type(pi, b, t_flag, p) == BandType::N ? "N" : "O")
                            : "-");
            out << "\n";
        }
        return kExitOk;
    }
    out << bands.size() << " band(s) of width " << m << " in " << pi.render() << "\n";
    for (Band b : bands) {
        out << "  start=" << b.start << " {" << band_parts(b) << "}";
        if (with_parity)
            out << " parity=" << (band_parity(pi, b, p) == Parity::Even ? "even" : "odd");
        if (with_type && band_in_window(pi, b, Window{t_flag, true}, p.eta))
            out << " type=" << (band_type(pi, b, t_flag, p) == BandType::N ? "N" : "O");
        if (windows) {
            auto [closed, open] = window_lists(b);
            out << " windows closed:";
            for (int t : closed) out << " " << t;
            out << " open:";
            for (int t : open) out << " " << t;
        }
        out << "\n";
    }
    return kExitOk;
}

void print_trace_plain(const std::vector<TraceStep>& trace, int eta, std::ostream& out) {
    int step = 1;
    for (const TraceStep& ts : trace) {
        const bool overlined = ts.action == TraceAction::RemovedOverlined ||
                               ts.action == TraceAction::InsertedOverlined;
        const bool removal = ts.action == TraceAction::RemovedOverlined ||
                             ts.action == TraceAction::RemovedPlain;
        out << "  step " << step++ << ": t=" << ts.t << " "
            << (removal ? "removed " : "inserted ") << render_part(Part{ts.t * eta, overlined})
            << " (s=" << render_ext(ts.s_before) << ", g=" << render_ext(ts.g_before) << ")";
        if (ts.evidence)
            out << " witness band start=" << ts.evidence->start
                << " width=" << ts.evidence->width;
        out << "\n";
    }
}

int run_phi(const CommonOpts& opts, const std::string& pi_text, bool trace, std::ostream& out) {
    const Overpartition pi = Overpartition::parse(pi_text);
    const BijectionResult res = phi(pi, opts.params());
    if (opts.format == "json") {
        nlohmann::json doc{{"pi", pi.render()},
                           {"tau", partition_to_json(res.tau)},
                           {"mu", res.mu.render()}};
        if (trace) doc["trace"] = trace_to_json(res.trace, opts.eta);
        out << doc.dump(2) << "\n";
    } else if (opts.format == "csv") {
        out << "t,action,part,s_before,g_before\n";
        for (const TraceStep& ts : res.trace) {
            const bool overlined = ts.action == TraceAction::RemovedOverlined;
            out << ts.t << "," << action_name(ts.action) << ","
                << render_part(Part{ts.t * opts.eta, overlined}) << ","
                << render_ext(ts.s_before) << "," << render_ext(ts.g_before) << "\n";
        }
    } else {
        out << "tau = " << res.tau.render() << "\n";
        out << "mu  = " << res.mu.render() << "\n";
        if (trace) print_trace_plain(res.trace, opts.eta, out);
    }
    return kExitOk;
}

int run_psi(const CommonOpts& opts, const std::string& tau_text, const std::string& mu_text,
            bool trace, std::ostream& out) {
    const Partition tau = Partition::parse(tau_text);
    const Overpartition mu = Overpartition::parse(mu_text);
    const PsiResult res = psi(tau, mu, opts.params());
    if (opts.format == "json") {
        nlohmann::json doc{{"tau", partition_to_json(tau)},
                           {"mu", mu.render()},
                           {"pi", res.pi.render()}};
        if (trace) doc["trace"] = trace_to_json(res.trace, opts.eta);
        out << doc.dump(2) << "\n";
    } else if (opts.format == "csv") {
        out << "t,action,part,s_before,g_before\n";
        for (const TraceStep& ts : res.trace) {
            const bool overlined = ts.action == TraceAction::InsertedOverlined;
            out << ts.t << "," << action_name(ts.action) << ","
                << render_part(Part{ts.t * opts.eta, overlined}) << ","
                << render_ext(ts.s_before) << "," << render_ext(ts.g_before) << "\n";
        }
    } else {
        out << "pi = " << res.pi.render() << "\n";
        if (trace) print_trace_plain(res.trace, opts.eta, out);
    }
    return kExitOk;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for overpartition families: counting, band inspection, "
                 "identity verification and reduction/augmentation traces"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string family = "B0bar";
    std::string which = "main";
    std::string pi_text;
    std::string tau_text;
    std::string mu_text;
    int m = 1;
    int t_flag = 0;
    bool windows = false;
    bool trace = false;

    CLI::App* count = app.add_subcommand("count", "per-n family counts");
    add_param_flags(count, opts);
    count->add_option("--family", family, "family to count")->required();
    count->add_option("--j", opts.j, "parity selector for Aj/Bj");
    count->add_option("--max-n", opts.max_n, "largest weight")->required();
    add_format_flag(count, opts);
    add_threads_flag(count, opts);

    CLI::App* verify = app.add_subcommand("verify", "check an identity by enumeration");
    add_param_flags(verify, opts);
    verify->add_option("--identity", which,
                       "main | factor | classical | gfA0bar | gfBj (or a report name)")
        ->required();
    verify->add_option("--j", opts.j, "parity selector where needed");
    verify->add_option("--max-n", opts.max_n, "largest weight")->required();
    add_format_flag(verify, opts);
    add_threads_flag(verify, opts);

    CLI::App* bands = app.add_subcommand("bands", "list m-bands with parity or type");
    add_param_flags(bands, opts);
    bands->add_option("--pi", pi_text, "overpartition text")->required();
    bands->add_option("--m", m, "band width")->required();
    bands->add_option("--t", t_flag, "window index for type classification");
    bands->add_flag("--windows", windows, "also list window membership");
    add_format_flag(bands, opts);

    CLI::App* phi_cmd = app.add_subcommand("phi", "apply the reduction map");
    add_param_flags(phi_cmd, opts);
    phi_cmd->add_option("--pi", pi_text, "overpartition text")->required();
    phi_cmd->add_flag("--trace", trace, "print the per-step trace");
    add_format_flag(phi_cmd, opts);

    CLI::App* psi_cmd = app.add_subcommand("psi", "apply the augmentation map");
    add_param_flags(psi_cmd, opts);
    psi_cmd->add_option("--tau", tau_text, "partition of distinct multiples of eta")->required();
    psi_cmd->add_option("--mu", mu_text, "overpartition text")->required();
    psi_cmd->add_flag("--trace", trace, "print the per-step trace");
    add_format_flag(psi_cmd, opts);

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "exhaustive phi/psi round trips");
    add_param_flags(roundtrip, opts);
    roundtrip->add_option("--max-n", opts.max_n, "largest total weight")->required();
    add_format_flag(roundtrip, opts);
    add_threads_flag(roundtrip, opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        if (count->parsed()) return run_count(opts, family, out, err);
        if (verify->parsed()) return run_verify(opts, which, out, err);
        if (bands->parsed()) return run_bands(opts, pi_text, m, t_flag, windows, out);
        if (phi_cmd->parsed()) return run_phi(opts, pi_text, trace, out);
        if (psi_cmd->parsed()) return run_psi(opts, tau_text, mu_text, trace, out);
        if (roundtrip->parsed()) {
            const VerifyReport report =
                roundtrip_check_parallel(opts.params(), opts.max_n, opts.threads);
            return emit_report(report, opts.format, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    err << "error: no subcommand\n";
    return kExitBadInput;
}

} // namespace bressoud
