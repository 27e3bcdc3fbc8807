#include "maxgal/construct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "maxgal/arith/crt.hpp"
#include "maxgal/arith/fp_poly.hpp"
#include "maxgal/arith/primes.hpp"
#include "maxgal/arith/resultant.hpp"
#include "maxgal/error.hpp"

namespace maxgal {

namespace {

Integer I(std::uint64_t v) { return from_u64(v); }

std::vector<Integer> odd_primes_up_to(int g) {
    std::vector<Integer> out;
    for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(std::max(g, 0)))) {
        if (p != 2) out.push_back(I(p));
    }
    return out;
}

bool primitive_mod_all(const Integer& p, std::initializer_list<std::uint64_t> qs) {
    for (std::uint64_t q : qs) {
        if (!is_primitive_root(p, I(q))) return false;
    }
    return true;
}

// splitmix64 finaliser, to spread per-spec seeds.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

ZPoly x_pow(int n) { return ZPoly::monomial(1, n); }

ZPoly poly_mod(const ZPoly& f, const Integer& m) { return ResiduePoly::from(f, m).lift(); }

Integer n_tilde_for(const Integer& N, int g) {
    Integer out = N;
    for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(2 * g - 1))) {
        if (mod(N, I(p)) != 0) out *= I(p);
    }
    return out;
}

bool has_triple_root(const ZPoly& f, const Integer& p) { return max_multiplicity(f, p) > 2; }

} // namespace

std::vector<std::string> plan_violations(const PrimePlan& plan) {
    std::vector<std::string> out;
    const int g = plan.g;
    const Integer n = 2 * g + 2;
    if (plan.tuple.g != g) out.push_back("tuple genus differs from plan genus");
    if (auto why = tuple_violation(plan.tuple); !why.empty()) out.push_back("tuple: " + why);
    const auto& t = plan.tuple;

    struct Named {
        const char* name;
        const Integer* value;
    };
    const Named named[] = {{"p_t", &plan.p_t}, {"p_t'", &plan.p_t2}, {"p2", &plan.p2},       {"p2'", &plan.p2p},
                           {"p3", &plan.p3},   {"p3'", &plan.p3p},  {"p_irr", &plan.p_irr}, {"p_lin", &plan.p_lin}};
    for (const auto& [name, v] : named) {
        if (!is_prime(*v)) out.push_back(std::string(name) + " is not prime");
    }
    if (!out.empty()) return out;

    if (plan.p_t <= g) out.push_back("p_t must exceed g");
    if (plan.p_t2 <= g) out.push_back("p_t' must exceed g");
    for (const auto& [name, v] : {named[2], named[3], named[4], named[5]}) {
        if (*v <= n) out.push_back(std::string(name) + " must exceed 2g+2");
    }
    if (!primitive_mod_all(plan.p2, {t.q1, t.q2, t.q3})) out.push_back("p2 is not a primitive root mod q1, q2, q3");
    if (!primitive_mod_all(plan.p3, {t.q3})) out.push_back("p3 is not a primitive root mod q3");
    if (!primitive_mod_all(plan.p2p, {t.q3, t.q4, t.q5})) out.push_back("p2' is not a primitive root mod q3, q4, q5");
    if (!primitive_mod_all(plan.p3p, {t.q5})) out.push_back("p3' is not a primitive root mod q5");
    if (mod(plan.p2, 3) != 1) out.push_back("p2 is not 1 mod 3");
    if (mod(plan.p3, 3) != 1) out.push_back("p3 is not 1 mod 3");

    std::set<Integer> reserved{2};
    for (const auto& l : odd_primes_up_to(g)) reserved.insert(l);
    std::set<Integer> seen;
    for (const auto& [name, v] : named) {
        if (reserved.count(*v)) out.push_back(std::string(name) + " collides with 2 or an odd prime <= g");
        if (!seen.insert(*v).second) out.push_back(std::string(name) + " repeats another plan prime");
    }
    return out;
}

void validate_plan(const PrimePlan& plan) {
    auto v = plan_violations(plan);
    if (!v.empty()) throw PreconditionError("invalid prime plan: " + v.front());
}

PrimePlan fixture_plan() {
    PrimePlan p;
    p.g = 6;
    p.tuple = GoldbachTuple{6, 7, 7, 13, 3, 11};
    p.p_t = 7;
    p.p_t2 = 11;
    p.p2 = 19;
    p.p2p = 41;
    p.p3 = 37;
    p.p3p = 17;
    p.p_irr = 23;
    p.p_lin = 29;
    return p;
}

PrimePlan plan_primes(int g, const GoldbachTuple& tuple, std::uint64_t seed, std::uint64_t search_limit) {
    if (tuple.g != g || !is_valid(tuple)) {
        throw PreconditionError("plan_primes needs a valid tuple for genus " + std::to_string(g));
    }
    const auto& t = tuple;
    std::set<Integer> taken{2};
    for (const auto& l : odd_primes_up_to(g)) taken.insert(l);
    const std::set<Integer> qs{I(t.q1), I(t.q2), I(t.q3), I(t.q4), I(t.q5)};

    auto scan = [&](const char* name, const Integer& lower, bool avoid_qs, const std::function<bool(const Integer&)>& ok) {
        Integer p = next_prime(lower + I(seed) - 1);
        for (std::uint64_t step = 0; step < search_limit; ++step, p = next_prime(p)) {
            if (taken.count(p) || (avoid_qs && qs.count(p)) || !ok(p)) continue;
            taken.insert(p);
            return p;
        }
        throw Error(std::string("prime search bound exhausted for ") + name);
    };
    const Integer above_n = 2 * g + 3;
    const Integer above_g = g + 1;
    PrimePlan plan;
    plan.g = g;
    plan.tuple = tuple;
    plan.p2 = scan("p2", above_n, true, [&](const Integer& p) {
        return mod(p, 3) == 1 && primitive_mod_all(p, {t.q1, t.q2, t.q3});
    });
    plan.p3 = scan("p3", above_n, true, [&](const Integer& p) { return mod(p, 3) == 1 && primitive_mod_all(p, {t.q3}); });
    plan.p2p = scan("p2'", above_n, true, [&](const Integer& p) { return primitive_mod_all(p, {t.q3, t.q4, t.q5}); });
    plan.p3p = scan("p3'", above_n, true, [&](const Integer& p) { return primitive_mod_all(p, {t.q5}); });
    auto any = [](const Integer&) { return true; };
    plan.p_t = scan("p_t", above_g, true, any);
    plan.p_t2 = scan("p_t'", above_g, true, any);
    plan.p_irr = scan("p_irr", Integer(3), true, any);
    plan.p_lin = scan("p_lin", Integer(3), true, any);
    validate_plan(plan);
    return plan;
}

std::set<Integer> exceptional_primes(const PrimePlan& plan) { return {plan.p2, plan.p2p, plan.p3, plan.p3p}; }

std::vector<LocalSpec> local_spec_list(const PrimePlan& plan) {
    validate_plan(plan);
    const auto& t = plan.tuple;
    std::vector<LocalSpec> out;
    out.push_back(LocalSpec::type(plan.p_t, 1, {2}));
    out.push_back(LocalSpec::type(plan.p_t2, 1, {2}));
    for (const auto& l : odd_primes_up_to(plan.g)) out.push_back(LocalSpec::double_roots(l, plan.g));
    out.push_back(LocalSpec::type(plan.p2, 1, {I(t.q1), I(t.q2)}));
    out.push_back(LocalSpec::type(plan.p2p, 1, {I(t.q4), I(t.q5)}));
    out.push_back(LocalSpec::type(plan.p3, 2, {I(t.q3)}));
    out.push_back(LocalSpec::type(plan.p3p, 2, {I(t.q5)}));
    out.push_back(LocalSpec::irreducible(plan.p_irr));
    out.push_back(LocalSpec::linear_times_irreducible(plan.p_lin));
    out.push_back(LocalSpec::good_reduction_2(plan.g));
    return out;
}

Integer plan_modulus(const PrimePlan& plan) {
    Integer N = 1;
    for (const auto& s : local_spec_list(plan)) N *= s.modulus();
    return N;
}

std::vector<SpecWitness> fixture_witnesses() {
    const auto specs = local_spec_list(fixture_plan());
    const ZPoly x = ZPoly{0, 1};
    auto c = [](long v) { return ZPoly::constant(v); };
    const std::vector<ZPoly> polys{
        ZPoly{3, 0, 5, 0, 4, 2, 3, 5, 2, 0, 0, 0, 1} * (x_pow(2) - c(7)),
        ZPoly{2, 5, 6, 5, 5, 2, 4, 1, 1, 0, 0, 0, 1} * (x_pow(2) - c(11)),
        ZPoly::linear(1) * x * ZPoly{2, 2, 1, 0, 2, 0, 1}.pow(2),
        ZPoly::linear(1) * x * ZPoly{2, 0, 1, 4, 1, 0, 1}.pow(2),
        (x_pow(7) - c(19)) * (ZPoly::linear(1).pow(7) - c(19)),
        (x_pow(11) - c(41)) * (ZPoly::linear(1).pow(3) - c(41)),
        (x_pow(13) - c(37 * 37)) * ZPoly{1, 1},
        (x_pow(11) - c(17 * 17)) * ZPoly{14, 1, 0, 1},
        ZPoly{5, 22, 1, 19, 18, 1, 16, 5, 1, 0, 0, 0, 0, 0, 1},
        ZPoly{1, 1} * (x_pow(13) + ZPoly{27, 7}),
        x_pow(14) + ZPoly::monomial(2, 13) + c(4096),
    };
    std::vector<SpecWitness> out;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        out.push_back({specs[i], ResiduePoly::from(polys[i], specs[i].modulus())});
    }
    return out;
}

std::vector<SpecWitness> build_witnesses(const std::vector<LocalSpec>& specs, int g, std::uint64_t seed,
                                         std::uint64_t budget) {
    std::vector<SpecWitness> out;
    WitnessOptions opt;
    opt.budget = budget;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        out.push_back({specs[i], witness_poly(specs[i], g, mix(seed ^ mix(i)), opt)});
    }
    return out;
}

Assembly assemble(const std::vector<SpecWitness>& witnesses, int g) {
    const int n = 2 * g + 2;
    if (witnesses.empty()) throw PreconditionError("assemble needs at least one witness");
    Integer N = 1;
    for (const auto& w : witnesses) {
        if (w.witness.degree() != n || !w.witness.is_monic()) {
            throw PreconditionError("witness for " + w.spec.describe() + " is not monic of degree 2g+2");
        }
        if (gcd(N, w.witness.modulus()) != 1) throw PreconditionError("witness moduli are not pairwise coprime");
        N *= w.witness.modulus();
    }
    std::vector<Integer> coeffs;
    for (int i = 0; i < n; ++i) {
        std::vector<Congruence> system;
        for (const auto& w : witnesses) system.emplace_back(w.witness.coeff(i), w.witness.modulus());
        coeffs.push_back(crt_integers(system));
    }
    coeffs.emplace_back(1);
    return {ZPoly(coeffs), N};
}

std::string to_string(RepairStatus status) {
    return status == RepairStatus::Unconditional ? "unconditional" : "conditional";
}

RepairRecord fix_multiplicities(const ZPoly& f0, const Integer& N, int g, const std::set<Integer>& exceptions,
                                std::uint64_t scan_bound, std::uint64_t rho_budget) {
    const int n = 2 * g + 2;
    if (f0.degree() != n || !f0.is_monic()) throw PreconditionError("fix_multiplicities needs a monic polynomial of degree 2g+2");
    if (N < 1) throw PreconditionError("modulus must be positive");
    RepairRecord rec;
    rec.scan_bound = scan_bound;
    rec.rho_budget = rho_budget;
    rec.n_tilde = n_tilde_for(N, g);
    ZPoly f = f0;

    // Small primes outside N: fix f mod p first, keeping the others unchanged.
    {
        std::mt19937_64 rng(0);
        std::vector<std::vector<Congruence>> per_coeff(static_cast<std::size_t>(n));
        bool any = false;
        for (std::uint64_t pw : primes_up_to(static_cast<std::uint64_t>(2 * g - 1))) {
            const Integer p = I(pw);
            if (mod(N, p) == 0) continue;
            std::vector<Integer> c(static_cast<std::size_t>(n), Integer(0));
            if (has_triple_root(f, p)) {
                any = true;
                rec.small_prime_fixes.push_back(p);
                for (int tries = 0;; ++tries) {
                    if (tries > 100000) throw Error("no small-prime correction found at " + to_string(p));
                    for (auto& x : c) x = I(rng() % pw);
                    if (!has_triple_root(f + N * ZPoly(c), p)) break;
                }
            }
            for (int i = 0; i < n; ++i) per_coeff[static_cast<std::size_t>(i)].emplace_back(c[static_cast<std::size_t>(i)], p);
        }
        if (any) {
            std::vector<Integer> shift;
            for (const auto& system : per_coeff) shift.push_back(crt_integers(system));
            f = f + N * ZPoly(shift);
        }
    }

    // Separate f' and f'' over Q.
    Integer M;
    for (Integer k = 0;; ++k) {
        if (k > 10000) throw Error("linear adjustment failed to separate f' and f''");
        ZPoly candidate = f + (k * rec.n_tilde) * ZPoly{0, 1};
        M = derivative_resultant(candidate);
        if (M != 0) {
            rec.linear_nudge = k;
            f = candidate;
            break;
        }
    }

    // Prime divisors of M: trial division, then rho on what is left.
    Integer rest = abs(M);
    std::vector<Integer> found;
    for_each_prime(2, scan_bound, [&](std::uint64_t p) {
        if (rest == 1 || !mpz_divisible_ui_p(rest.get_mpz_t(), p)) return;
        found.push_back(I(p));
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    });
    if (rest > 1) {
        const auto part = pollard_factor(rest, rho_budget);
        for (const auto& [p, e] : part.primes) {
            (void)e;
            found.push_back(p);
        }
        rec.residual_cofactor = part.cofactor;
    }
    std::sort(found.begin(), found.end());

    std::vector<Congruence> system;
    for (const auto& p : found) {
        if (exceptions.count(p)) continue;
        const bool divides_tilde = mod(rec.n_tilde, p) == 0;
        const bool bad = has_triple_root(f, p);
        if (divides_tilde) {
            // primes of N carry their prescribed local shape; the extra small ones must be clean
            if (bad && mod(N, p) != 0) throw Error("triple root at " + to_string(p) + " after the small-prime step");
            continue;
        }
        rec.checked_primes.push_back(p);
        if (!bad) {
            system.emplace_back(0, p);
            continue;
        }
        if (p <= 2 * g) throw Error("internal: bad prime " + to_string(p) + " <= 2g outside the modulus");
        const FpPoly fp = FpPoly::from(f, p);
        const FpPoly f2 = gcd(fp.derivative(), fp.derivative().derivative());
        Integer c = 0;
        for (;; ++c) {
            if (c >= p) throw Error("internal: no constant shift clears " + to_string(p));
            if (gcd(fp + FpPoly::constant(p, c), f2).is_one()) break;
        }
        rec.repaired_primes.push_back(p);
        system.emplace_back(mod(c * invmod(rec.n_tilde, p), p), p);
    }
    if (!rec.repaired_primes.empty()) {
        rec.z = crt_integers(system);
        f = f + ZPoly::constant(rec.z * rec.n_tilde);
    }
    for (const auto& p : rec.checked_primes) {
        if (has_triple_root(f, p)) throw Error("repair left a triple root at " + to_string(p));
    }
    rec.f = f;
    rec.status = rec.residual_cofactor == 1 ? RepairStatus::Unconditional : RepairStatus::Conditional;
    return rec;
}

Certificate build_certificate(int g, const BuildOptions& options) {
    if (g < 1) throw PreconditionError("genus must be positive");
    const auto tuples = two_g_eps_tuples(g);
    if (tuples.empty()) {
        throw ExceptionalGenusError(g, "genus " + std::to_string(g) +
                                           " is exceptional: no primes q4 < q1 <= q2 < q5 < q3 < 2g+2 with "
                                           "q1+q2 = q4+q5 = 2g+2");
    }
    Certificate cert;
    cert.g = g;
    cert.fixture = options.fixture;
    cert.seed = options.seed;
    if (options.fixture) {
        if (g != 6) throw PreconditionError("fixture mode exists only for genus 6");
        cert.plan = fixture_plan();
        cert.specs = fixture_witnesses();
    } else {
        const GoldbachTuple tuple = options.tuple.value_or(tuples.front());
        cert.plan = plan_primes(g, tuple, options.seed);
        cert.specs = build_witnesses(local_spec_list(cert.plan), g, options.seed, options.witness_budget);
    }
    auto [f0, N] = assemble(cert.specs, g);
    cert.f0 = f0;
    cert.N = N;
    cert.repair = fix_multiplicities(f0, N, g, exceptional_primes(cert.plan), options.scan_bound, options.rho_budget);
    if (auto v = certificate_violations(cert); !v.empty()) throw Error("internal: certificate invariant broken: " + v.front());
    return cert;
}

std::vector<std::string> certificate_violations(const Certificate& cert) {
    std::vector<std::string> out = plan_violations(cert.plan);
    if (!out.empty()) return out;
    const int g = cert.g;
    if (cert.plan.g != g) out.push_back("plan genus differs");
    const auto specs = local_spec_list(cert.plan);
    if (specs.size() != cert.specs.size()) {
        out.push_back("spec list length differs from the plan's menu");
        return out;
    }
    Integer product = 1;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& sw = cert.specs[i];
        const std::string what = sw.spec.describe();
        if (!(sw.spec == specs[i])) out.push_back("spec " + std::to_string(i) + " differs from the plan's menu");
        if (sw.witness.modulus() != sw.spec.modulus()) out.push_back("witness modulus wrong for " + what);
        if (ResiduePoly::from(cert.f0, sw.witness.modulus()) != sw.witness) out.push_back("f0 does not reduce to the witness for " + what);
        if (!realizes(sw.witness.lift(), sw.spec, g)) out.push_back("witness does not realize " + what);
        product *= sw.witness.modulus();
    }
    if (cert.N != product) out.push_back("N is not the product of the witness moduli");
    if (cert.N != plan_modulus(cert.plan)) out.push_back("N does not match the plan");
    if (cert.f0.degree() != 2 * g + 2 || !cert.f0.is_monic()) out.push_back("f0 is not monic of degree 2g+2");
    const auto& r = cert.repair;
    if (r.n_tilde != n_tilde_for(cert.N, g)) out.push_back("n_tilde does not match N");
    if (r.f.degree() != 2 * g + 2 || !r.f.is_monic()) out.push_back("repaired f is not monic of degree 2g+2");
    if (poly_mod(r.f - cert.f0, cert.N) != ZPoly()) out.push_back("repaired f is not congruent to f0 mod N");
    if ((r.residual_cofactor == 1) != (r.status == RepairStatus::Unconditional)) out.push_back("repair status inconsistent");
    return out;
}

} // namespace maxgal
