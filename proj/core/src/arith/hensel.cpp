#include "maxgal/arith/hensel.hpp"

#include "maxgal/arith/fp_poly.hpp"
#include "maxgal/arith/primes.hpp"
#include "maxgal/error.hpp"

namespace maxgal {

namespace {

// Exponent j with m == p^j, or 0 if m is not a positive power of p.
unsigned power_exponent(const Integer& m, const Integer& p) {
    Integer r = m;
    unsigned j = 0;
    while (r > 1 && mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        ++j;
    }
    return r == 1 ? j : 0;
}

ZPoly reduced(const ZPoly& f, const Integer& m) { return ResiduePoly::from(f, m).lift(); }

// Lifts f = G * H from p^from to p^to; G, H monic, f monic.
void lift_pair(const ZPoly& f, ZPoly& G, ZPoly& H, const Integer& p, unsigned from, unsigned to) {
    const FpPoly g = FpPoly::from(G, p);
    const FpPoly h = FpPoly::from(H, p);
    const FpXgcd bez = xgcd(g, h);
    if (!bez.g.is_one()) throw PreconditionError("non-coprime factorization");
    Integer pk = pow(p, from);
    for (unsigned k = from; k < to; ++k) {
        ZPoly diff = f - G * H;
        for (const auto& c : diff.coeffs()) {
            if (!mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t())) throw Error("hensel step lost exactness");
        }
        std::vector<Integer> scaled;
        scaled.reserve(diff.coeffs().size());
        for (const auto& c : diff.coeffs()) scaled.push_back(c / pk);
        FpPoly e(p, scaled);
        // e = dG * h + dH * g with deg dG < deg g, deg dH < deg h.
        FpPoly dG = (bez.t * e) % g;
        FpPoly dH = (e - dG * h) / g;
        G = G + pk * dG.lift();
        H = H + pk * dH.lift();
        pk *= p;
        G = reduced(G, pk);
        H = reduced(H, pk);
    }
}

} // namespace

std::vector<ResiduePoly> hensel_lift_factorization(const ZPoly& f, const std::vector<ResiduePoly>& factors,
                                                   const Integer& p, unsigned m) {
    if (!is_prime(p)) throw PreconditionError("hensel lift needs a prime, got " + to_string(p));
    if (m < 1) throw PreconditionError("hensel lift target exponent must be at least 1");
    if (!f.is_monic()) throw PreconditionError("hensel lift needs a monic polynomial");
    if (factors.empty()) throw PreconditionError("hensel lift of an empty factor list");
    const Integer& start_mod = factors.front().modulus();
    const unsigned j = power_exponent(start_mod, p);
    if (j == 0) throw PreconditionError("factor modulus is not a power of " + to_string(p));
    for (const auto& g : factors) {
        if (g.modulus() != start_mod) throw PreconditionError("factors have different moduli");
        if (!g.is_monic()) throw PreconditionError("hensel lift needs monic factors");
    }
    ResiduePoly prod(start_mod, {1});
    for (const auto& g : factors) prod = prod * g;
    if (!(prod == ResiduePoly::from(f, start_mod))) {
        throw PreconditionError("factor product does not match the polynomial modulo " + to_string(start_mod));
    }
    for (std::size_t a = 0; a < factors.size(); ++a) {
        for (std::size_t b = a + 1; b < factors.size(); ++b) {
            if (!gcd(FpPoly::from(factors[a].lift(), p), FpPoly::from(factors[b].lift(), p)).is_one()) {
                throw PreconditionError("non-coprime factorization");
            }
        }
    }
    const Integer target = pow(p, m);
    std::vector<ResiduePoly> out;
    if (j >= m) {
        for (const auto& g : factors) out.push_back(g.reduce(target));
        return out;
    }
    // Peel off one factor at a time: lift g_i against the product of the rest.
    ZPoly current = reduced(f, target);
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        ZPoly G = factors[i].lift();
        ResiduePoly rest(start_mod, {1});
        for (std::size_t k = i + 1; k < factors.size(); ++k) rest = rest * factors[k];
        ZPoly H = rest.lift();
        lift_pair(current, G, H, p, j, m);
        out.push_back(ResiduePoly::from(G, target));
        current = H;
    }
    out.push_back(ResiduePoly::from(current, target));
    return out;
}

} // namespace maxgal
