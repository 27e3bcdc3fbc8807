#include "maxgal/verify.hpp"

#include <algorithm>
#include <map>

#include "maxgal/arith/factor.hpp"
#include "maxgal/arith/primes.hpp"
#include "maxgal/arith/resultant.hpp"
#include "maxgal/error.hpp"
#include "maxgal/goldbach.hpp"
#include "maxgal/inertia.hpp"
#include "maxgal/localtypes.hpp"

namespace maxgal {

namespace {

const std::vector<std::pair<Hypothesis, std::string>>& names() {
    static const std::vector<std::pair<Hypothesis, std::string>> table{
        {Hypothesis::TwoGEps, "2G+eps"}, {Hypothesis::GEps, "G+eps"},    {Hypothesis::TwoT, "2T"},
        {Hypothesis::TT, "TT"},          {Hypothesis::P2, "p2"},         {Hypothesis::P3, "p3"},
        {Hypothesis::P2Prime, "p2'"},    {Hypothesis::P3Prime, "p3'"},   {Hypothesis::Three, "3"},
        {Hypothesis::Symmetric, "S_2g+2"}, {Hypothesis::SS, "ss"},
    };
    return table;
}

std::string join(const std::vector<Integer>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ",") + to_string(x);
    return out;
}

std::string join(const std::set<Integer>& xs) { return join(std::vector<Integer>(xs.begin(), xs.end())); }

Integer I(std::uint64_t v) { return from_u64(v); }

int multiplicity_at(const ZPoly& f, const Integer& p) {
    if (fits_u64(p) && p < (Integer(1) << 62)) return max_root_multiplicity(f, to_u64(p));
    return max_multiplicity(f, p);
}

// Primes that are primitive roots: returns the q that fail.
std::vector<Integer> not_primitive(const Integer& p, std::initializer_list<std::uint64_t> qs) {
    std::vector<Integer> bad;
    for (std::uint64_t q : qs) {
        if (!is_primitive_root(p, I(q))) bad.push_back(I(q));
    }
    return bad;
}

Flag type_flag(Hypothesis h, const ZPoly& f, const Integer& p, int t, std::vector<Integer> qs,
               std::initializer_list<std::uint64_t> prim, int g) {
    Flag flag{h, FlagStatus::Fail, ""};
    const std::string label = std::to_string(t) + "-{" + join(qs) + "} at " + to_string(p);
    if (p <= 2 * g + 2 || !is_prime(p)) {
        flag.evidence = to_string(p) + " is not a prime above 2g+2";
        return flag;
    }
    if (!recognize_type(f, p, t, qs)) {
        flag.evidence = "no type " + label;
        return flag;
    }
    if (auto bad = not_primitive(p, prim); !bad.empty()) {
        flag.evidence = "type " + label + " but not a primitive root modulo " + join(bad);
        return flag;
    }
    flag.status = FlagStatus::Pass;
    std::vector<Integer> mods;
    for (std::uint64_t q : prim) mods.push_back(I(q));
    flag.evidence = "type " + label + ", primitive root modulo " + join(mods);
    return flag;
}

} // namespace

std::string to_string(Hypothesis h) {
    for (const auto& [k, v] : names()) {
        if (k == h) return v;
    }
    return "?";
}

Hypothesis parse_hypothesis(const std::string& name) {
    for (const auto& [k, v] : names()) {
        if (v == name) return k;
    }
    throw PreconditionError("unknown hypothesis " + name);
}

const std::vector<Hypothesis>& all_hypotheses() {
    static const std::vector<Hypothesis> all = [] {
        std::vector<Hypothesis> v;
        for (const auto& [k, name] : names()) v.push_back(k);
        return v;
    }();
    return all;
}

std::string to_string(FlagStatus s) {
    switch (s) {
    case FlagStatus::Pass: return "pass";
    case FlagStatus::Fail: return "fail";
    case FlagStatus::Conditional: return "conditional";
    }
    return "?";
}

FlagStatus parse_flag_status(const std::string& name) {
    for (auto s : {FlagStatus::Pass, FlagStatus::Fail, FlagStatus::Conditional}) {
        if (to_string(s) == name) return s;
    }
    throw PreconditionError("unknown flag status " + name);
}

std::string to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::MaximalAll: return "maximal-all";
    case VerdictKind::MaximalExcept: return "maximal-except";
    case VerdictKind::None: return "none";
    }
    return "?";
}

VerdictKind parse_verdict_kind(const std::string& name) {
    for (auto k : {VerdictKind::MaximalAll, VerdictKind::MaximalExcept, VerdictKind::None}) {
        if (to_string(k) == name) return k;
    }
    throw PreconditionError("unknown verdict " + name);
}

const Flag& VerificationReport::flag(Hypothesis h) const {
    for (const auto& f : flags) {
        if (f.hypothesis == h) return f;
    }
    throw PreconditionError("report has no flag " + to_string(h));
}

bool is_totally_toric(const ZPoly& f, const Integer& ell, int g) {
    const auto profile = multiplicity_profile(f, ell);
    return std::count(profile.begin(), profile.end(), 2) == g && profile.back() <= 2;
}

VerificationReport check_hypotheses(const ZPoly& f, const PrimePlan& plan, std::uint64_t scan_bound,
                                    std::uint64_t rho_budget) {
    const int g = plan.g;
    if (g < 1) throw PreconditionError("genus must be positive");
    if (f.degree() != 2 * g + 2) {
        throw PreconditionError("degree " + std::to_string(f.degree()) + " does not match genus " + std::to_string(g));
    }
    if (!f.is_monic()) throw PreconditionError("polynomial must be monic");
    if (resultant(f, f.derivative()) == 0) throw PreconditionError("polynomial must be squarefree");

    VerificationReport r;
    r.g = g;
    r.plan = plan;
    const auto& t = plan.tuple;
    auto add = [&](Hypothesis h, bool ok, std::string evidence) {
        r.flags.push_back({h, ok ? FlagStatus::Pass : FlagStatus::Fail, std::move(evidence)});
    };

    // Goldbach conditions
    {
        const std::string why = tuple_violation(t);
        const bool ok = why.empty() && t.g == g;
        add(Hypothesis::TwoGEps, ok, ok ? t.to_string() : (why.empty() ? "tuple is for another genus" : why));
        const std::uint64_t n = 2 * static_cast<std::uint64_t>(g) + 2;
        bool single = t.q1 + t.q2 == n && t.q1 <= t.q2 && t.q2 < t.q3 && t.q3 < n;
        for (auto q : {t.q1, t.q2, t.q3}) single = single && is_prime(I(q));
        add(Hypothesis::GEps, single,
            std::to_string(t.q1) + "+" + std::to_string(t.q2) + " with q3=" + std::to_string(t.q3));
    }

    // (2T)
    {
        bool ok = plan.p_t != plan.p_t2;
        std::string ev;
        for (const auto& p : {plan.p_t, plan.p_t2}) {
            const bool here = p > g && p != 2 && is_prime(p) && transvection_at(f, p);
            ok = ok && here;
            ev += (ev.empty() ? "" : "; ") + std::string(here ? "type 1-{2} at " : "no type 1-{2} at ") + to_string(p);
        }
        if (plan.p_t == plan.p_t2) ev += "; p_t and p_t' coincide";
        add(Hypothesis::TwoT, ok, ev);
        r.transposition = ok;
    }

    // (TT)
    {
        std::string ev;
        for (std::uint64_t ell : primes_up_to(static_cast<std::uint64_t>(g))) {
            if (ell == 2) continue;
            if (!is_totally_toric(f, I(ell), g)) r.not_totally_toric.push_back(I(ell));
            ev += (ev.empty() ? "" : ",") + std::to_string(ell);
        }
        const bool ok = r.not_totally_toric.empty();
        add(Hypothesis::TT, ok,
            ev.empty() ? "no odd primes <= g"
                       : (ok ? "g double roots at " + ev : "not totally toric at " + join(r.not_totally_toric)));
    }

    r.flags.push_back(type_flag(Hypothesis::P2, f, plan.p2, 1, {I(t.q1), I(t.q2)}, {t.q1, t.q2, t.q3}, g));
    r.flags.push_back(type_flag(Hypothesis::P3, f, plan.p3, 2, {I(t.q3)}, {t.q3}, g));
    r.flags.push_back(type_flag(Hypothesis::P2Prime, f, plan.p2p, 1, {I(t.q4), I(t.q5)}, {t.q3, t.q4, t.q5}, g));
    r.flags.push_back(type_flag(Hypothesis::P3Prime, f, plan.p3p, 2, {I(t.q5)}, {t.q5}, g));

    // (3)
    {
        const bool ok = mod(plan.p2, 3) == 1 && mod(plan.p3, 3) == 1;
        add(Hypothesis::Three, ok,
            "p2 = " + to_string(mod(plan.p2, 3)) + ", p3 = " + to_string(mod(plan.p3, 3)) + " mod 3");
    }

    // (S_2g+2)
    {
        auto pattern = [&](const Integer& p) -> std::vector<int> {
            if (p == 2 || !is_prime(p)) return {};
            return fp_factor(FpPoly::from(f, p)).degree_pattern();
        };
        const auto irr = pattern(plan.p_irr);
        const auto lin = pattern(plan.p_lin);
        r.cycle_full = irr == std::vector<int>{2 * g + 2};
        r.cycle_minus_one = lin == std::vector<int>{1, 2 * g + 1};
        auto render = [](const std::vector<int>& v) {
            std::string s;
            for (int d : v) s += (s.empty() ? "" : "+") + std::to_string(d);
            return s.empty() ? std::string("n/a") : s;
        };
        add(Hypothesis::Symmetric, r.cycle_full && r.cycle_minus_one,
            "degrees " + render(irr) + " mod " + to_string(plan.p_irr) + ", " + render(lin) + " mod " +
                to_string(plan.p_lin));
    }

    // (ss)
    {
        const std::set<Integer> exceptions{plan.p2, plan.p2p, plan.p3, plan.p3p};
        ScanSummary& scan = r.scan;
        scan.bound = scan_bound;
        scan.rho_budget = rho_budget;
        const bool two_ok = good_reduction_at_2(f, g);
        for_each_prime(3, scan_bound, [&](std::uint64_t p) {
            if (exceptions.count(I(p))) return;
            if (max_root_multiplicity(f, p) > 2) scan.bad_primes.push_back(I(p));
        });
        // Above the bound a triple root at p forces p | Res(f', f'').
        const Integer M = derivative_resultant(f);
        if (M == 0) {
            scan.resultant_zero = true;
        } else {
            Integer rest = abs(M);
            for_each_prime(2, scan_bound, [&](std::uint64_t p) {
                while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            });
            if (rest > 1) {
                const auto part = pollard_factor(rest, rho_budget);
                for (const auto& [p, e] : part.primes) {
                    (void)e;
                    scan.resultant_primes.push_back(p);
                    if (!exceptions.count(p) && multiplicity_at(f, p) > 2) scan.bad_primes.push_back(p);
                }
                scan.residual_cofactor = part.cofactor;
            }
        }
        std::sort(scan.bad_primes.begin(), scan.bad_primes.end());
        Flag flag{Hypothesis::SS, FlagStatus::Pass, ""};
        if (!two_ok) {
            flag.status = FlagStatus::Fail;
            flag.evidence = "no good reduction model at 2";
        } else if (!scan.bad_primes.empty()) {
            flag.status = FlagStatus::Fail;
            flag.evidence = "root of multiplicity >= 3 modulo " + join(scan.bad_primes);
        } else if (scan.resultant_zero) {
            flag.status = FlagStatus::Conditional;
            flag.evidence = "multiplicities <= 2 below " + std::to_string(scan_bound) + "; Res(f',f'') = 0";
        } else if (scan.residual_cofactor != 1) {
            flag.status = FlagStatus::Conditional;
            flag.evidence = "multiplicities <= 2 below " + std::to_string(scan_bound) +
                            "; unsplit cofactor of Res(f',f'') with " +
                            std::to_string(mpz_sizeinbase(scan.residual_cofactor.get_mpz_t(), 10)) + " digits";
        } else {
            flag.evidence = "good reduction model at 2; multiplicities <= 2 below " + std::to_string(scan_bound) +
                            " and at every prime factor of Res(f',f'')";
        }
        r.flags.push_back(flag);
    }

    // (adm): the local types cover p2, p3 (and p2', p3' when typed); semistable
    // reduction covers everything else.
    {
        bool ok = r.flag(Hypothesis::SS).holds() && r.flag(Hypothesis::P2).holds() && r.flag(Hypothesis::P3).holds();
        r.adm_notes.push_back(std::string("(ss) ") + to_string(r.flag(Hypothesis::SS).status));
        for (auto [h, p] : {std::pair{Hypothesis::P2Prime, plan.p2p}, std::pair{Hypothesis::P3Prime, plan.p3p}}) {
            if (r.flag(h).holds()) {
                r.adm_notes.push_back("type at " + to_string(p));
                continue;
            }
            const bool semistable = is_prime(p) && p != 2 && multiplicity_at(f, p) <= 2;
            if (!semistable) r.not_semistable.push_back(p);
            r.adm_notes.push_back(to_string(p) + (semistable ? ": multiplicities <= 2" : ": not covered"));
            ok = ok && semistable;
        }
        for (const auto& p : r.scan.bad_primes) r.not_semistable.push_back(p);
        r.adm = ok;
    }
    return r;
}

Verdict verdict(const VerificationReport& report, int g) {
    Verdict v;
    auto holds = [&](Hypothesis h) { return report.flag(h).holds(); };
    const bool ss_conditional = report.flag(Hypothesis::SS).status == FlagStatus::Conditional;
    const auto& plan = report.plan;
    const auto& t = plan.tuple;
    const std::string cond_text =
        ss_conditional ? ", conditional on no triple roots above " + std::to_string(report.scan.bound) : "";

    const bool full = holds(Hypothesis::TwoGEps) && holds(Hypothesis::TwoT) && holds(Hypothesis::P2) &&
                      holds(Hypothesis::P3) && holds(Hypothesis::P2Prime) && holds(Hypothesis::P3Prime) &&
                      holds(Hypothesis::TT) && holds(Hypothesis::SS);
    if (full) {
        v.theorem = "double-goldbach";
        v.conditional = ss_conditional;
        v.symmetric_mod_2 = holds(Hypothesis::Symmetric);
        if (!holds(Hypothesis::Three)) v.excluded.insert(3);
        if (!v.symmetric_mod_2) v.excluded.insert(2);
        if (v.excluded.empty()) {
            v.kind = VerdictKind::MaximalAll;
            v.text = "maximal for all l (GSp_" + std::to_string(2 * g) + " for odd l, S_" + std::to_string(2 * g + 2) +
                     " for l=2)" + cond_text;
        } else {
            v.kind = VerdictKind::MaximalExcept;
            v.text = "GSp_" + std::to_string(2 * g) + " for all l outside {" + join(v.excluded) + "}" + cond_text;
        }
        return v;
    }

    const bool partial = holds(Hypothesis::GEps) && holds(Hypothesis::TwoT) && holds(Hypothesis::P2) &&
                         holds(Hypothesis::P3) && report.adm;
    if (!partial) {
        v.text = "hypotheses insufficient for any conclusion";
        return v;
    }
    v.kind = VerdictKind::MaximalExcept;
    v.theorem = "single-goldbach";
    v.conditional = ss_conditional;
    v.excluded = {2, 3, I(t.q1), I(t.q2), I(t.q3), plan.p2, plan.p3};
    // Each remaining l needs semistability with l > g, total toricity, or a
    // primitive root modulo q3. Those failing all three are excluded as well.
    std::vector<Integer> suspects = report.not_totally_toric;
    suspects.insert(suspects.end(), report.not_semistable.begin(), report.not_semistable.end());
    for (const auto& ell : suspects) {
        if (v.excluded.count(ell)) continue;
        if (!is_primitive_root(ell, I(t.q3))) v.excluded.insert(ell);
    }
    v.text = "GSp_" + std::to_string(2 * g) + " for all l outside {" + join(v.excluded) +
             "} (every other l is semistable with l > g, totally toric, or a primitive root modulo " +
             std::to_string(t.q3) + ")" + cond_text;
    return v;
}

std::set<Integer> excluded_primes_exceptional(int g) {
    static const std::map<int, std::set<Integer>> table{
        {2, {3, 5}}, {3, {3, 5, 7}}, {4, {5, 7}}, {5, {5, 7, 11}}, {7, {5, 11, 13}}, {13, {11, 17, 23}},
    };
    const auto it = table.find(g);
    if (it == table.end()) throw PreconditionError("genus " + std::to_string(g) + " is not exceptional");
    return it->second;
}

} // namespace maxgal
