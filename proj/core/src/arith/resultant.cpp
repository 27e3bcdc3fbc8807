#include "maxgal/arith/resultant.hpp"

#include <utility>

#include "maxgal/error.hpp"

namespace maxgal {

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
    std::vector<Integer> r = a.coeffs();
    const int db = b.degree();
    const Integer& lb = b.leading();
    int da = a.degree();
    int steps = da - db + 1;
    while (da >= db && !r.empty()) {
        Integer lead = r[static_cast<std::size_t>(da)];
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j) {
            r[static_cast<std::size_t>(da - db + j)] -= lead * b.coeffs()[static_cast<std::size_t>(j)];
        }
        --steps;
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
        da = static_cast<int>(r.size()) - 1;
    }
    Integer scale = pow(lb, static_cast<unsigned long>(std::max(steps, 0)));
    for (auto& c : r) c *= scale;
    return ZPoly(std::move(r));
}

ZPoly divide_exact(const ZPoly& a, const Integer& d) {
    std::vector<Integer> c = a.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return ZPoly(std::move(c));
}

Integer divexact(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

Integer resultant(const ZPoly& a_in, const ZPoly& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) throw PreconditionError("resultant of a zero polynomial");
    ZPoly A = a_in;
    ZPoly B = b_in;
    Integer sign = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) sign = -1;
    }
    if (B.degree() == 0) return sign * pow(B.leading(), static_cast<unsigned long>(A.degree()));

    const Integer ca = A.content();
    const Integer cb = B.content();
    A = divide_exact(A, ca);
    B = divide_exact(B, cb);
    const Integer t = pow(ca, static_cast<unsigned long>(B.degree())) * pow(cb, static_cast<unsigned long>(A.degree()));
    Integer g = 1;
    Integer h = 1;
    for (;;) {
        const int delta = A.degree() - B.degree();
        if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) sign = -sign;
        ZPoly R = pseudo_remainder(A, B);
        if (R.is_zero()) return 0;
        A = B;
        B = divide_exact(R, g * pow(h, static_cast<unsigned long>(delta)));
        g = A.leading();
        // h <- g^delta / h^(delta - 1)
        h = divexact(pow(g, static_cast<unsigned long>(delta)), pow(h, static_cast<unsigned long>(delta - 1)));
        if (B.degree() == 0) break;
    }
    const int da = A.degree();
    h = divexact(pow(B.leading(), static_cast<unsigned long>(da)), pow(h, static_cast<unsigned long>(da - 1)));
    return sign * t * h;
}

Integer derivative_resultant(const ZPoly& f) {
    ZPoly d1 = f.derivative();
    ZPoly d2 = d1.derivative();
    if (d1.is_zero() || d2.is_zero()) throw PreconditionError("derivative_resultant needs degree at least 2");
    return resultant(d1, d2);
}

} // namespace maxgal
