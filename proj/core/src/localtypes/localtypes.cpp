#include "maxgal/localtypes.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "maxgal/arith/factor.hpp"
#include "maxgal/arith/fp_poly.hpp"
#include "maxgal/arith/hensel.hpp"
#include "maxgal/arith/primes.hpp"
#include "maxgal/error.hpp"

namespace maxgal {

namespace {

constexpr std::uint64_t kCenterSearchLimit = 1000000;

Integer random_below(std::mt19937_64& rng, const Integer& bound) {
    Integer acc = 0;
    const std::size_t words = mpz_sizeinbase(bound.get_mpz_t(), 2) / 64 + 2;
    for (std::size_t i = 0; i < words; ++i) acc = (acc << 64) + from_u64(rng());
    return mod(acc, bound);
}

FpPoly random_monic(std::mt19937_64& rng, const Integer& p, int degree) {
    std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = random_below(rng, p);
    c.back() = 1;
    return FpPoly(p, std::move(c));
}

bool separable(const FpPoly& h) { return h.degree() <= 0 || gcd(h, h.derivative()).is_one(); }

// Spends one unit of budget per candidate.
void charge(std::uint64_t& used, std::uint64_t budget) {
    if (used++ >= budget) throw Error("no witness found");
}

ResiduePoly to_residue(const ZPoly& f, const Integer& m) { return ResiduePoly::from(f, m); }

bool eisenstein_coeffs(const std::vector<Integer>& a, const Integer& p, int t) {
    if (t < 1) throw PreconditionError("t-Eisenstein needs t >= 1");
    if (a.size() < 2 || a.back() != 1) throw PreconditionError("t-Eisenstein test needs a monic polynomial of degree >= 1");
    const Integer pt = pow(p, static_cast<unsigned long>(t));
    const Integer pt1 = pt * p;
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (mod(a[i], pt) != 0) return false;
    }
    return mod(a[0], pt) == 0 && mod(a[0], pt1) != 0;
}

} // namespace

std::string to_string(LocalKind kind) {
    switch (kind) {
    case LocalKind::Type: return "type";
    case LocalKind::DoubleRoots: return "double_roots";
    case LocalKind::Irreducible: return "irreducible";
    case LocalKind::LinearTimesIrreducible: return "linear_times_irreducible";
    case LocalKind::GoodReduction2: return "good_reduction_2";
    }
    return "unknown";
}

LocalKind parse_local_kind(const std::string& name) {
    for (LocalKind k : {LocalKind::Type, LocalKind::DoubleRoots, LocalKind::Irreducible,
                        LocalKind::LinearTimesIrreducible, LocalKind::GoodReduction2}) {
        if (to_string(k) == name) return k;
    }
    throw PreconditionError("unknown local spec kind '" + name + "'");
}

LocalSpec LocalSpec::type(const Integer& p, int t, std::vector<Integer> qs) {
    LocalSpec s;
    s.kind = LocalKind::Type;
    s.p = p;
    s.t = t;
    s.m = t + 1;
    s.qs = std::move(qs);
    return s;
}

LocalSpec LocalSpec::double_roots(const Integer& p, int count) {
    LocalSpec s;
    s.kind = LocalKind::DoubleRoots;
    s.p = p;
    s.m = 2;
    s.count = count;
    return s;
}

LocalSpec LocalSpec::irreducible(const Integer& p) {
    LocalSpec s;
    s.kind = LocalKind::Irreducible;
    s.p = p;
    return s;
}

LocalSpec LocalSpec::linear_times_irreducible(const Integer& p) {
    LocalSpec s;
    s.kind = LocalKind::LinearTimesIrreducible;
    s.p = p;
    return s;
}

LocalSpec LocalSpec::good_reduction_2(int g) {
    LocalSpec s;
    s.kind = LocalKind::GoodReduction2;
    s.p = 2;
    s.m = 2 * g + 2;
    return s;
}

std::string LocalSpec::describe() const {
    std::string where = " at " + maxgal::to_string(p) + " (mod " + maxgal::to_string(p) + "^" + std::to_string(m) + ")";
    switch (kind) {
    case LocalKind::Type: {
        std::string q;
        for (std::size_t i = 0; i < qs.size(); ++i) q += (i ? "," : "") + maxgal::to_string(qs[i]);
        return "type " + std::to_string(t) + "-{" + q + "}" + where;
    }
    case LocalKind::DoubleRoots: return std::to_string(count) + " double roots" + where;
    case LocalKind::Irreducible: return "irreducible" + where;
    case LocalKind::LinearTimesIrreducible: return "linear times irreducible" + where;
    case LocalKind::GoodReduction2: return "good reduction" + where;
    }
    return "unknown";
}

std::string spec_violation(const LocalSpec& s, int g) {
    if (g < 1) return "genus must be positive";
    if (!is_prime(s.p)) return maxgal::to_string(s.p) + " is not prime";
    const int n = 2 * g + 2;
    switch (s.kind) {
    case LocalKind::Type: {
        if (s.p == 2) return "type specs need an odd prime";
        if (s.t < 1) return "type specs need t >= 1";
        if (s.m != s.t + 1) return "type specs need modulus exponent t+1";
        if (s.qs.empty()) return "type specs need at least one block";
        Integer total = 0;
        for (const auto& q : s.qs) {
            if (!is_prime(q)) return "block degree " + maxgal::to_string(q) + " is not prime";
            total += q;
        }
        if (total > n) return "block degrees exceed 2g+2";
        if (Integer(static_cast<long>(s.qs.size())) > s.p) return "more blocks than residues mod p";
        return {};
    }
    case LocalKind::DoubleRoots:
        if (s.p == 2) return "double-root specs need an odd prime";
        if (s.m != 2) return "double-root specs need modulus exponent 2";
        if (s.count < 1 || s.count > g + 1) return "double-root count must lie in [1, g+1]";
        return {};
    case LocalKind::Irreducible:
    case LocalKind::LinearTimesIrreducible:
        if (s.m != 1) return "factorization specs need modulus exponent 1";
        return {};
    case LocalKind::GoodReduction2:
        if (s.p != 2) return "good-reduction spec lives at 2";
        if (s.m != n) return "good-reduction spec needs modulus exponent 2g+2";
        return {};
    }
    return "unknown kind";
}

void validate(const LocalSpec& spec, int g) {
    if (auto why = spec_violation(spec, g); !why.empty()) throw PreconditionError(why);
}

bool is_t_eisenstein(const ZPoly& f, const Integer& p, int t) { return eisenstein_coeffs(f.coeffs(), p, t); }

bool is_t_eisenstein(const ResiduePoly& f, const Integer& p, int t) {
    if (t < 1) throw PreconditionError("t-Eisenstein needs t >= 1");
    const Integer need = pow(p, static_cast<unsigned long>(t) + 1);
    if (mod(f.modulus(), need) != 0) throw Error("insufficient modulus");
    return eisenstein_coeffs(f.reduce(need).coeffs(), p, t);
}

std::optional<TypeWitness> recognize_type(const ZPoly& f, const Integer& p, int t, const std::vector<Integer>& qs) {
    if (p == 2 || !is_prime(p)) throw PreconditionError("recognize_type needs an odd prime, got " + maxgal::to_string(p));
    if (t < 1) throw PreconditionError("recognize_type needs t >= 1");
    if (!f.is_monic()) throw PreconditionError("recognize_type needs a monic polynomial");
    if (qs.empty()) throw PreconditionError("recognize_type needs at least one block degree");
    for (const auto& q : qs) {
        if (q < 2) throw PreconditionError("block degrees must be at least 2");
    }

    // Repeated roots of f mod p, which must all be rational.
    std::map<Integer, std::vector<Integer>> roots_by_mult;  // multiplicity -> roots ascending
    FpPoly simple = FpPoly::constant(p, 1);
    for (const auto& [part, mult] : squarefree_decomposition(FpPoly::from(f, p))) {
        if (mult == 1) {
            simple = part;
            continue;
        }
        for (const auto& [factor, e] : fp_factor(part).factors) {
            (void)e;
            if (factor.degree() != 1) return std::nullopt;
            roots_by_mult[Integer(mult)].push_back(mod(-factor.coeff(0), p));
        }
    }
    std::vector<Integer> want = qs, have;
    for (const auto& [mult, roots] : roots_by_mult) have.insert(have.end(), roots.size(), mult);
    std::sort(want.begin(), want.end());
    if (want != have) return std::nullopt;
    for (auto& [mult, roots] : roots_by_mult) std::sort(roots.begin(), roots.end(), std::greater<>());

    TypeWitness w{p, t, qs, {}, {}, {}, ResiduePoly(p, {1})};
    std::vector<ResiduePoly> factors;
    for (const auto& q : qs) {
        auto& pool = roots_by_mult[q];
        w.shifts.push_back(pool.back());
        pool.pop_back();
        FpPoly block = FpPoly::linear(p, w.shifts.back()).pow(static_cast<unsigned>(q.get_ui()));
        factors.emplace_back(p, block.coeffs());
    }
    if (simple.degree() > 0) factors.emplace_back(p, simple.coeffs());

    const unsigned m = static_cast<unsigned>(t) + 1;
    const Integer pm = pow(p, m);
    auto lifted = hensel_lift_factorization(f, factors, p, m);

    for (std::size_t i = 0; i < qs.size(); ++i) {
        const ResiduePoly& G = lifted[i];
        const Integer& q = qs[i];
        std::optional<ResiduePoly> shifted;
        Integer center;
        if (mod(q, p) != 0) {
            // Killing the x^(q-1) coefficient finds an Eisenstein center whenever one exists.
            center = mod(-G.coeff(static_cast<int>(q.get_ui()) - 1) * invmod(q, pm), pm);
            ResiduePoly g = G.shifted(center);
            if (is_t_eisenstein(g, p, t)) shifted = g;
        } else {
            const Integer steps = pm / p;
            if (steps > kCenterSearchLimit) throw Error("center search too large for p dividing a block degree");
            for (Integer k = 0; k < steps && !shifted; ++k) {
                center = w.shifts[i] + k * p;
                ResiduePoly g = G.shifted(center);
                if (is_t_eisenstein(g, p, t)) shifted = g;
            }
        }
        if (!shifted) return std::nullopt;
        w.centers.push_back(center);
        w.blocks.push_back(*shifted);
    }
    w.cofactor = simple.degree() > 0 ? lifted.back() : ResiduePoly(pm, {1});
    return w;
}

ResiduePoly witness_poly(const LocalSpec& spec, int g, std::uint64_t seed, const WitnessOptions& options) {
    validate(spec, g);
    const int n = 2 * g + 2;
    const Integer& p = spec.p;
    const Integer M = spec.modulus();
    std::mt19937_64 rng(seed);
    std::uint64_t used = 0;

    switch (spec.kind) {
    case LocalKind::Type: {
        const Integer pt = pow(p, static_cast<unsigned long>(spec.t));
        ZPoly product = ZPoly::constant(1);
        int block_degree = 0;
        for (std::size_t i = 0; i < spec.qs.size(); ++i) {
            const unsigned q = static_cast<unsigned>(spec.qs[i].get_ui());
            product = product * (ZPoly::linear(Integer(static_cast<long>(i))).pow(q) - ZPoly::constant(pt));
            block_degree += static_cast<int>(q);
        }
        const int d = n - block_degree;
        const long k = static_cast<long>(spec.qs.size());
        auto acceptable = [&](const FpPoly& h) {
            if (h.degree() != d || !h.is_monic() || !separable(h)) return false;
            for (long j = 0; j < k; ++j) {
                if (h.eval(Integer(j)) == 0) return false;
            }
            return true;
        };
        FpPoly h = FpPoly::constant(p, 1);
        if (options.cofactor) {
            h = FpPoly::from(*options.cofactor, p);
            if (!acceptable(h)) throw PreconditionError("cofactor override is not a separable monic polynomial of degree " +
                                                        std::to_string(d) + " avoiding the block roots");
            product = product * *options.cofactor;
        } else {
            do {
                charge(used, options.budget);
                h = random_monic(rng, p, d);
            } while (!acceptable(h));
            product = product * h.lift();
        }
        return to_residue(product, M);
    }
    case LocalKind::DoubleRoots: {
        const int d = spec.count;
        const int r = n - 2 * d;
        FpPoly s = FpPoly::constant(p, 1);
        if (Integer(r) <= p) {
            for (int j = 0; j < r; ++j) s = s * FpPoly::linear(p, Integer(j));
        } else {
            do {
                charge(used, options.budget);
                s = random_monic(rng, p, r);
            } while (!separable(s));
        }
        FpPoly h = FpPoly::constant(p, 1);
        do {
            charge(used, options.budget);
            h = random_monic(rng, p, d);
        } while (!separable(h) || !gcd(h, s).is_one());
        const ZPoly hl = h.lift();
        return to_residue(s.lift() * hl * hl, M);
    }
    case LocalKind::Irreducible: {
        FpPoly h = FpPoly::constant(p, 1);
        do {
            charge(used, options.budget);
            h = random_monic(rng, p, n);
        } while (!h.is_irreducible());
        return to_residue(h.lift(), M);
    }
    case LocalKind::LinearTimesIrreducible: {
        FpPoly h = FpPoly::constant(p, 1);
        do {
            charge(used, options.budget);
            h = random_monic(rng, p, n - 1);
        } while (!h.is_irreducible());
        return to_residue(ZPoly{1, 1} * h.lift(), M);
    }
    case LocalKind::GoodReduction2: {
        ZPoly w = ZPoly::monomial(1, n) + ZPoly::monomial(2, n - 1) + ZPoly::constant(pow(Integer(2), 2UL * g));
        return to_residue(w, M);
    }
    }
    throw Error("unknown local spec kind");
}

bool realizes(const ZPoly& f, const LocalSpec& spec, int g) {
    validate(spec, g);
    const int n = 2 * g + 2;
    if (f.degree() != n || !f.is_monic()) return false;
    switch (spec.kind) {
    case LocalKind::Type: return recognize_type(f, spec.p, spec.t, spec.qs).has_value();
    case LocalKind::DoubleRoots: {
        const auto profile = multiplicity_profile(f, spec.p);
        return profile.back() <= 2 && std::count(profile.begin(), profile.end(), 2) == spec.count;
    }
    case LocalKind::Irreducible: return FpPoly::from(f, spec.p).is_irreducible();
    case LocalKind::LinearTimesIrreducible:
        return fp_factor(FpPoly::from(f, spec.p)).degree_pattern() == std::vector<int>{1, n - 1};
    case LocalKind::GoodReduction2: return good_reduction_at_2(f, g);
    }
    return false;
}

std::vector<int> multiplicity_profile(const ZPoly& f, const Integer& p) {
    const FpPoly fp = FpPoly::from(f, p);
    if (fp.is_zero()) throw PreconditionError("polynomial vanishes modulo " + maxgal::to_string(p));
    std::vector<int> out;
    for (const auto& [part, mult] : squarefree_decomposition(fp)) out.insert(out.end(), static_cast<std::size_t>(part.degree()), mult);
    std::sort(out.begin(), out.end());
    return out;
}

int max_multiplicity(const ZPoly& f, const Integer& p) {
    if (fits_u64(p) && p < (Integer(1) << 62)) return max_root_multiplicity(f, to_u64(p));
    const auto profile = multiplicity_profile(f, p);
    return profile.empty() ? 0 : profile.back();
}

bool good_reduction_at_2(const ZPoly& f, int g) {
    const int n = 2 * g + 2;
    if (g < 1 || f.degree() != n || !f.is_monic()) {
        throw PreconditionError("good_reduction_at_2 needs a monic polynomial of degree 2g+2");
    }
    const Integer two = 2;
    if (mod(f.coeff(0) - pow(two, 2UL * g), pow(two, static_cast<unsigned long>(n))) != 0) return false;
    if (mod(f.coeff(n - 1), 4) != 2) return false;
    for (int i = 1; i <= 2 * g; ++i) {
        if (mod(f.coeff(i), pow(two, static_cast<unsigned long>(n - i))) != 0) return false;
    }
    return true;
}

} // namespace maxgal
