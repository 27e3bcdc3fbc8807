#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "maxgal/arith/primes.hpp"
#include "maxgal/goldbach.hpp"
#include "maxgal/inertia.hpp"
#include "maxgal/localtypes.hpp"

namespace maxgal::cli {

namespace {

std::string join(const std::vector<Integer>& xs, const char* sep = ",") {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : sep) + to_string(x);
    return out;
}

std::string join(const std::set<Integer>& xs) { return join(std::vector<Integer>(xs.begin(), xs.end())); }

int exit_for(const VerificationReport& r) {
    for (const auto& f : r.flags) {
        if (!f.holds()) return kHypothesesFail;
    }
    return r.flag(Hypothesis::SS).status == FlagStatus::Conditional ? kConditional : kOk;
}

void print_flags(const VerificationReport& r, const Verdict& v, std::ostream& out) {
    for (const auto& f : r.flags) out << "  (" << to_string(f.hypothesis) << ") " << to_string(f.status) << ": " << f.evidence << '\n';
    out << "verdict: " << v.text << '\n';
}

std::string exceptional_message(int g, const std::string& what) {
    std::string msg = what;
    try {
        msg += "\nprimes excluded by the partial construction: " + join(excluded_primes_exceptional(g));
    } catch (const PreconditionError&) {
    }
    return msg;
}

int goldbach_command(std::optional<std::uint64_t> max, std::optional<int> genus, std::ostream& out, std::ostream& err) {
    if (max.has_value() == genus.has_value()) {
        err << "goldbach: give exactly one of --max or --genus\n";
        return kUsage;
    }
    if (max) {
        std::vector<Integer> bad;
        for (auto n : verify_range(*max)) bad.push_back(from_u64(n));
        out << "exceptions up to " << *max << ": " << join(bad) << '\n';
        return kOk;
    }
    const int g = *genus;
    if (g < 1) {
        err << "goldbach: genus must be positive\n";
        return kUsage;
    }
    const auto tuples = two_g_eps_tuples(g);
    if (tuples.empty()) {
        out << exceptional_message(g, "genus " + std::to_string(g) + " is an exceptional genus") << '\n';
        return kOk;
    }
    out << "2g+2 = " << 2 * g + 2 << '\n';
    for (const auto& t : tuples) {
        out << t.q1 << '+' << t.q2 << " = " << t.q4 << '+' << t.q5 << ", q3 = " << t.q3 << '\n';
    }
    return kOk;
}

struct ConstructArgs {
    int genus = 0;
    bool fixture = false;
    std::uint64_t seed = 0;
    std::uint64_t scan_bound = 0;
    std::uint64_t rho_budget = kDefaultRhoBudget;
    std::string out_path;
};

int construct_command(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    BuildOptions opts;
    opts.fixture = a.fixture;
    opts.seed = a.seed;
    opts.scan_bound = a.scan_bound;
    opts.rho_budget = a.rho_budget;
    Certificate cert;
    try {
        cert = build_certificate(a.genus, opts);
    } catch (const ExceptionalGenusError& e) {
        err << exceptional_message(a.genus, e.what()) << '\n';
        return kExceptionalGenus;
    }
    io::CertificateFile file{cert, check_hypotheses(cert.repair.f, cert.plan, a.scan_bound, a.rho_budget),
                             std::nullopt};
    file.verdict = verdict(*file.report, cert.g);
    io::write_json_file(a.out_path, io::certificate_to_json(file));

    out << "genus " << cert.g << ", tuple " << cert.plan.tuple.to_string() << '\n';
    out << "N = " << to_string(cert.N) << '\n';
    out << "f = f0 + " << to_string(cert.repair.z) << " * " << to_string(cert.repair.n_tilde);
    if (cert.repair.linear_nudge != 0) out << " + " << to_string(cert.repair.linear_nudge) << " * N~ * x";
    out << '\n';
    print_flags(*file.report, *file.verdict, out);
    out << "certificate written to " << a.out_path << '\n';
    return exit_for(*file.report);
}

struct VerifyArgs {
    std::string poly_path;
    std::string cert_path;
    std::uint64_t scan_bound = 0;
    std::uint64_t rho_budget = kDefaultRhoBudget;
};

int verify_command(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const io::CertificateFile file = io::certificate_from_json(io::read_json_file(a.cert_path));
    const Certificate& cert = file.cert;
    const ZPoly f = a.poly_path.empty() ? cert.repair.f : io::poly_from_json(io::read_json_file(a.poly_path));
    if (f.degree() != 2 * cert.g + 2) {
        err << "verify: polynomial has degree " << f.degree() << ", expected " << 2 * cert.g + 2 << '\n';
        return kUsage;
    }
    bool consistent = true;
    for (const auto& v : certificate_violations(cert)) {
        err << "certificate: " << v << '\n';
        consistent = false;
    }
    bool congruent = cert.N > 0;
    for (int i = 0; congruent && i <= f.degree(); ++i) congruent = mod(f.coeff(i) - cert.f0.coeff(i), cert.N) == 0;
    if (!congruent) {
        err << "f is not congruent to f0 modulo N\n";
        consistent = false;
    }
    const auto report = check_hypotheses(f, cert.plan, a.scan_bound, a.rho_budget);
    const auto v = verdict(report, cert.g);
    io::Json j;
    j["congruent_to_f0"] = congruent;
    j["report"] = io::report_to_json(report);
    j["verdict"] = io::verdict_to_json(v);
    out << j.dump(2) << '\n';
    if (!consistent) return kHypothesesFail;
    return exit_for(report);
}

struct InertiaArgs {
    std::string poly_path;
    std::string prime;
    std::optional<int> t;
    std::vector<std::string> qs;
};

std::vector<Integer> repeated_multiplicities(const ZPoly& f, const Integer& p) {
    std::vector<Integer> out;
    for (int m : multiplicity_profile(f, p)) {
        if (m > 1) out.push_back(m);
    }
    return out;
}

int inertia_command(const InertiaArgs& a, std::ostream& out, std::ostream& err) {
    const ZPoly f = io::poly_from_json(io::read_json_file(a.poly_path));
    if (f.degree() < 4 || f.degree() % 2 != 0) {
        err << "inertia: degree must be even and at least 4\n";
        return kUsage;
    }
    const int g = (f.degree() - 2) / 2;
    Integer p;
    try {
        p = parse_integer(a.prime);
    } catch (const Error&) {
        err << "inertia: --prime must be an integer\n";
        return kUsage;
    }
    if (!is_prime(p)) {
        err << "inertia: " << a.prime << " is not prime\n";
        return kUsage;
    }
    if (a.t.has_value() != !a.qs.empty()) {
        err << "inertia: --t and --qs go together\n";
        return kUsage;
    }
    out << "prime " << to_string(p) << ", genus " << g << '\n';
    const auto profile = multiplicity_profile(f, p);
    const auto repeated = repeated_multiplicities(f, p);
    out << "repeated roots mod " << to_string(p) << ": " << (repeated.empty() ? "none" : join(repeated)) << '\n';

    if (p == 2) {
        out << "good reduction model at 2: " << (good_reduction_at_2(f, g) ? "yes" : "no") << '\n';
        return kOk;
    }

    // Type: as requested, or guessed from the repeated roots with t = v_p of the block constant.
    std::optional<TypeWitness> type;
    int t = 0;
    std::vector<Integer> qs;
    if (a.t) {
        t = *a.t;
        for (const auto& q : a.qs) qs.push_back(parse_integer(q));
        type = recognize_type(f, p, t, qs);
        if (!type) out << "type " << t << "-{" << join(qs) << "}: not recognized\n";
    } else if (!repeated.empty()) {
        qs = repeated;
        for (t = 1; t <= 8 && !type; ++t) type = recognize_type(f, p, t, qs);
        --t;
        if (!type) out << "type: none with block degrees {" << join(qs) << "}\n";
    }
    if (type) {
        out << "type " << t << "-{" << join(type->qs) << "}, block centers mod " << to_string(p) << ": "
            << join(type->shifts) << '\n';
        try {
            const auto pic = clusters_from_type(t, type->qs, f.degree());
            for (std::size_t i = 0; i < pic.clusters.size(); ++i) {
                const auto& c = pic.clusters[i];
                const auto inv = cluster_invariants(pic, static_cast<int>(i), p);
                out << "  cluster " << i << ": size " << c.roots.size() << ", depth " << to_string(c.depth) << ", mu "
                    << to_string(inv.mu) << ", lambda " << to_string(inv.lambda) << ", epsilon "
                    << to_string(inv.epsilon) << '\n';
            }
            const auto dims = etale_decomposition(pic, g, p);
            out << "  abelian part " << dims.h1_ab << ", toric part " << dims.h1_t << '\n';
        } catch (const Error& e) {
            out << "  cluster picture: " << e.what() << '\n';
        }
        const bool odd_blocks = std::all_of(type->qs.begin(), type->qs.end(), [](const Integer& q) { return q != 2; });
        if (odd_blocks) {
            const auto eig = tame_eigenvalues(t, type->qs, g);
            std::map<std::string, int> counts;
            std::vector<std::string> order;
            for (const auto& z : eig.entries) {
                if (counts[z.to_string()]++ == 0) order.push_back(z.to_string());
            }
            out << "eigenvalues of tame inertia:";
            for (const auto& s : order) out << ' ' << s << (counts[s] > 1 ? " x" + std::to_string(counts[s]) : "");
            if (eig.trivial) out << " 1 x" << eig.trivial;
            out << '\n';
        } else {
            out << "inertia acts through a transvection\n";
        }
    }
    const auto ss = semistable_from_reduction(f, p, g);
    std::optional<AdmissibilityContext> ctx;
    if (ss.status == ReductionStatus::Semistable) {
        out << "semistable, toric dimension " << *ss.toric_dim << '\n';
        ctx = AdmissibilityContext{*ss.toric_dim == g ? AdmissibilityCase::TotallyToric : AdmissibilityCase::Semistable, 0, {}};
    } else {
        out << "semistability not decided by the reduction (multiplicity " << profile.back() << ")\n";
        if (type && t % 2 == 1) ctx = AdmissibilityContext{AdmissibilityCase::TypeOddT, t, type->qs};
        if (type && t % 2 == 0) ctx = AdmissibilityContext{AdmissibilityCase::TypeTwoQ, t, type->qs};
    }
    if (ctx) {
        const auto adm = admissibility_flags(p, g, *ctx);
        out << "admissible: " << (adm.admissible ? "yes" : "no") << ", p-admissible: " << (adm.p_admissible ? "yes" : "no")
            << '\n';
    }
    return kOk;
}

} // namespace

std::uint64_t default_scan_bound() {
    if (const char* env = std::getenv("MAXGAL_SCAN_BOUND")) {
        try {
            const Integer v = parse_integer(env);
            if (v > 0 && fits_u64(v)) return to_u64(v);
        } catch (const Error&) {
        }
    }
    return kDefaultScanBound;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hyperelliptic curves with maximal Galois action on torsion", "maxgal"};
    app.require_subcommand(1);
    const std::uint64_t scan_default = default_scan_bound();

    std::optional<std::uint64_t> gb_max;
    std::optional<int> gb_genus;
    auto* gb = app.add_subcommand("goldbach", "double Goldbach exceptions and genus tuples");
    gb->add_option("--max", gb_max, "list even n <= B without a double decomposition");
    gb->add_option("--genus", gb_genus, "list the prime tuples for genus g");

    ConstructArgs ca;
    ca.scan_bound = scan_default;
    auto* co = app.add_subcommand("construct", "build a certificate");
    co->add_option("--genus", ca.genus, "genus")->required();
    co->add_flag("--fixture", ca.fixture, "use the worked genus-6 choices");
    co->add_option("--seed", ca.seed, "offset for the prime scan and witness search");
    co->add_option("--scan-bound", ca.scan_bound, "trial-division bound for the multiplicity scan");
    co->add_option("--rho-budget", ca.rho_budget, "Pollard rho iterations for Res(f', f'')");
    co->add_option("--out", ca.out_path, "certificate path")->required();

    VerifyArgs va;
    va.scan_bound = scan_default;
    auto* ve = app.add_subcommand("verify", "check a polynomial against a certificate");
    ve->add_option("--poly", va.poly_path, "polynomial file (defaults to the certificate's f)");
    ve->add_option("--cert", va.cert_path, "certificate file")->required();
    ve->add_option("--scan-bound", va.scan_bound, "trial-division bound for the multiplicity scan");
    ve->add_option("--rho-budget", va.rho_budget, "Pollard rho iterations for Res(f', f'')");

    InertiaArgs ia;
    auto* in = app.add_subcommand("inertia", "local data of f at one prime");
    in->add_option("--poly", ia.poly_path, "polynomial file")->required();
    in->add_option("--prime", ia.prime, "prime")->required();
    in->add_option("--t", ia.t, "valuation of the blocks");
    in->add_option("--qs", ia.qs, "block degrees")->delimiter(',');

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gb->parsed()) return goldbach_command(gb_max, gb_genus, out, err);
        if (co->parsed()) return construct_command(ca, out, err);
        if (ve->parsed()) return verify_command(va, out, err);
        if (in->parsed()) return inertia_command(ia, out, err);
    } catch (const io::FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kHypothesesFail;
    }
    return kUsage;
}

} // namespace maxgal::cli
