#pragma once

// Dense polynomial algorithms over a prime field, written once and instantiated
// for a word-size field (p < 2^62) and an arbitrary-precision field.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "maxgal/arith/integer.hpp"
#include "maxgal/error.hpp"

namespace maxgal::detail {

struct WordField {
    using Elem = std::uint64_t;

    std::uint64_t p;

    static constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Elem inv(Elem a) const {
        // Extended Euclid on signed 128-bit to stay exact.
        __int128 r0 = p, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            __int128 q = r0 / r1;
            __int128 t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        if (r0 != 1) throw PreconditionError("non-invertible element in F_p");
        if (s0 < 0) s0 += p;
        return static_cast<Elem>(s0);
    }
    Elem from_integer(const Integer& v) const {
        Integer r = mod(v, from_u64(p));
        return to_u64(r);
    }
    Elem from_long(long v) const {
        long m = static_cast<long>(v % static_cast<long>(p));
        return static_cast<Elem>(m < 0 ? m + static_cast<long>(p) : m);
    }
    Integer to_integer(Elem a) const { return from_u64(a); }
    Integer characteristic() const { return from_u64(p); }
    Elem random(std::mt19937_64& rng) const { return rng() % p; }
};

struct BigField {
    using Elem = Integer;

    Integer p;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem s = a + b;
        if (s >= p) s -= p;
        return s;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem s = a - b;
        if (s < 0) s += p;
        return s;
    }
    Elem neg(const Elem& a) const { return a == 0 ? Elem(0) : Elem(p - a); }
    Elem mul(const Elem& a, const Elem& b) const { return mod(a * b, p); }
    Elem inv(const Elem& a) const { return invmod(a, p); }
    Elem from_integer(const Integer& v) const { return mod(v, p); }
    Elem from_long(long v) const { return mod(Integer(v), p); }
    Integer to_integer(const Elem& a) const { return a; }
    Integer characteristic() const { return p; }
    Elem random(std::mt19937_64& rng) const {
        std::size_t words = mpz_sizeinbase(p.get_mpz_t(), 2) / 64 + 2;
        Integer acc = 0;
        for (std::size_t i = 0; i < words; ++i) acc = (acc << 64) + from_u64(rng());
        return mod(acc, p);
    }
};

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
void trim(const F& f, Vec<F>& a) {
    while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
int deg(const Vec<F>& a) {
    return static_cast<int>(a.size()) - 1;
}

template <class F>
Vec<F> load(const F& f, const std::vector<Integer>& c) {
    Vec<F> v;
    v.reserve(c.size());
    for (const auto& x : c) v.push_back(f.from_integer(x));
    trim(f, v);
    return v;
}

template <class F>
std::vector<Integer> store(const F& f, const Vec<F>& a) {
    std::vector<Integer> out;
    out.reserve(a.size());
    for (const auto& x : a) out.push_back(f.to_integer(x));
    return out;
}

template <class F>
Vec<F> x_poly(const F& f) {
    return Vec<F>{f.zero(), f.one()};
}

template <class F>
bool is_one(const F& f, const Vec<F>& a) {
    return a.size() == 1 && a[0] == f.one();
}

template <class F>
Vec<F> add(const F& f, const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
    trim(f, r);
    return r;
}

template <class F>
Vec<F> sub(const F& f, const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
    trim(f, r);
    return r;
}

template <class F>
Vec<F> scale(const F& f, const Vec<F>& a, const typename F::Elem& c) {
    Vec<F> r(a.size(), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
    trim(f, r);
    return r;
}

template <class F>
Vec<F> mul(const F& f, const Vec<F>& a, const Vec<F>& b) {
    if (a.empty() || b.empty()) return {};
    Vec<F> r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(f, r);
    return r;
}

template <class F>
void divrem(const F& f, const Vec<F>& a, const Vec<F>& b, Vec<F>& q, Vec<F>& r) {
    if (b.empty()) throw PreconditionError("polynomial division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, f.zero());
    auto lead_inv = f.inv(b.back());
    int db = deg<F>(b);
    while (deg<F>(r) >= db) {
        int shift = deg<F>(r) - db;
        auto c = f.mul(r.back(), lead_inv);
        q[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i) {
            auto& slot = r[static_cast<std::size_t>(i + shift)];
            slot = f.sub(slot, f.mul(c, b[static_cast<std::size_t>(i)]));
        }
        trim(f, r);
    }
    trim(f, q);
}

template <class F>
Vec<F> rem(const F& f, const Vec<F>& a, const Vec<F>& b) {
    Vec<F> q, r;
    divrem(f, a, b, q, r);
    return r;
}

template <class F>
Vec<F> quo(const F& f, const Vec<F>& a, const Vec<F>& b) {
    Vec<F> q, r;
    divrem(f, a, b, q, r);
    return q;
}

template <class F>
Vec<F> monic(const F& f, const Vec<F>& a) {
    if (a.empty()) return a;
    return scale(f, a, f.inv(a.back()));
}

template <class F>
Vec<F> gcd(const F& f, Vec<F> a, Vec<F> b) {
    while (!b.empty()) {
        Vec<F> r = rem(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, a);
}

/// Returns monic g with s*a + t*b = g.
template <class F>
void xgcd(const F& f, const Vec<F>& a, const Vec<F>& b, Vec<F>& g, Vec<F>& s, Vec<F>& t) {
    Vec<F> r0 = a, r1 = b;
    Vec<F> s0{f.one()}, s1{};
    Vec<F> t0{}, t1{f.one()};
    while (!r1.empty()) {
        Vec<F> q, r;
        divrem(f, r0, r1, q, r);
        Vec<F> s2 = sub(f, s0, mul(f, q, s1));
        Vec<F> t2 = sub(f, t0, mul(f, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        g = r0;
        s = s0;
        t = t0;
        return;
    }
    auto li = f.inv(r0.back());
    g = scale(f, r0, li);
    s = scale(f, s0, li);
    t = scale(f, t0, li);
}

template <class F>
Vec<F> derivative(const F& f, const Vec<F>& a) {
    if (a.size() <= 1) return {};
    Vec<F> d(a.size() - 1, f.zero());
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = f.mul(a[i], f.from_long(static_cast<long>(i)));
    trim(f, d);
    return d;
}

template <class F>
typename F::Elem eval(const F& f, const Vec<F>& a, const typename F::Elem& x) {
    auto acc = f.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

template <class F>
Vec<F> mulmod(const F& f, const Vec<F>& a, const Vec<F>& b, const Vec<F>& m) {
    return rem(f, mul(f, a, b), m);
}

template <class F>
Vec<F> powmod(const F& f, const Vec<F>& base, const Integer& e, const Vec<F>& m) {
    Vec<F> result = rem(f, Vec<F>{f.one()}, m);
    Vec<F> b = rem(f, base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(f, result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(f, result, b, m);
    }
    return result;
}

/// For a polynomial a(x) = b(x^p), returns b (elements of F_p are their own p-th roots).
template <class F>
Vec<F> pth_root(const F& f, const Vec<F>& a) {
    Integer pz = f.characteristic();
    std::size_t p = fits_u64(pz) ? static_cast<std::size_t>(to_u64(pz)) : 0;
    if (a.size() <= 1) return a;
    if (p == 0 || p >= a.size()) throw PreconditionError("pth_root of a non-p-th power");
    Vec<F> r((a.size() - 1) / p + 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        if (i % p != 0) throw PreconditionError("pth_root of a non-p-th power");
        r[i / p] = a[i];
    }
    trim(f, r);
    return r;
}

/// Square-free decomposition of a monic polynomial: pairs (g_i, i) with f = prod g_i^i.
template <class F>
std::vector<std::pair<Vec<F>, int>> squarefree(const F& f, const Vec<F>& poly, int outer = 1) {
    std::vector<std::pair<Vec<F>, int>> out;
    if (deg<F>(poly) < 1) return out;
    Vec<F> c = gcd(f, poly, derivative(f, poly));
    Vec<F> w = quo(f, poly, c);
    int i = 1;
    while (!is_one(f, w)) {
        Vec<F> y = gcd(f, w, c);
        Vec<F> fac = quo(f, w, y);
        if (deg<F>(fac) > 0) out.emplace_back(std::move(fac), i * outer);
        w = std::move(y);
        c = quo(f, c, w);
        ++i;
    }
    if (deg<F>(c) > 0) {
        Integer pz = f.characteristic();
        int p = static_cast<int>(to_u64(pz));
        auto inner = squarefree(f, pth_root(f, c), outer * p);
        out.insert(out.end(), inner.begin(), inner.end());
    }
    return out;
}

/// Distinct-degree factorization of a monic square-free polynomial.
template <class F>
std::vector<std::pair<Vec<F>, int>> distinct_degree(const F& f, const Vec<F>& poly) {
    std::vector<std::pair<Vec<F>, int>> out;
    Vec<F> rest = poly;
    const Integer p = f.characteristic();
    Vec<F> x = x_poly(f);
    Vec<F> h = rem(f, x, rest);
    int i = 1;
    while (deg<F>(rest) >= 2 * i) {
        h = powmod(f, h, p, rest);
        Vec<F> g = gcd(f, rest, sub(f, h, x));
        if (!is_one(f, g)) {
            out.emplace_back(g, i);
            rest = quo(f, rest, g);
            h = rem(f, h, rest);
        }
        ++i;
    }
    if (deg<F>(rest) > 0) out.emplace_back(rest, deg<F>(rest));
    return out;
}

template <class F>
Vec<F> random_poly(const F& f, int degree_below, std::mt19937_64& rng) {
    Vec<F> a(static_cast<std::size_t>(degree_below), f.zero());
    for (auto& c : a) c = f.random(rng);
    trim(f, a);
    return a;
}

/// Equal-degree splitting (Cantor-Zassenhaus) of a monic square-free product of degree-d irreducibles.
template <class F>
void equal_degree(const F& f, const Vec<F>& poly, int d, std::mt19937_64& rng, std::vector<Vec<F>>& out) {
    int n = deg<F>(poly);
    if (n == d) {
        out.push_back(poly);
        return;
    }
    const Integer p = f.characteristic();
    const bool even = (p == 2);
    Integer exponent = (pow(p, static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        Vec<F> a = random_poly(f, n, rng);
        if (deg<F>(a) < 1) continue;
        Vec<F> g = gcd(f, poly, a);
        if (deg<F>(g) > 0 && deg<F>(g) < n) {
            equal_degree(f, g, d, rng, out);
            equal_degree(f, quo(f, poly, g), d, rng, out);
            return;
        }
        Vec<F> b;
        if (even) {
            // Trace map F_{2^d} -> F_2: a + a^2 + ... + a^(2^(d-1)).
            Vec<F> term = rem(f, a, poly);
            b = term;
            for (int k = 1; k < d; ++k) {
                term = mulmod(f, term, term, poly);
                b = add(f, b, term);
            }
        } else {
            b = sub(f, powmod(f, a, exponent, poly), Vec<F>{f.one()});
        }
        g = gcd(f, poly, b);
        if (deg<F>(g) > 0 && deg<F>(g) < n) {
            equal_degree(f, g, d, rng, out);
            equal_degree(f, quo(f, poly, g), d, rng, out);
            return;
        }
    }
}

/// Rabin's irreducibility test for a monic polynomial of degree n >= 1.
template <class F>
bool is_irreducible(const F& f, const Vec<F>& poly) {
    int n = deg<F>(poly);
    if (n < 1) return false;
    if (n == 1) return true;
    const Integer p = f.characteristic();
    Vec<F> x = x_poly(f);
    // Prime divisors of n.
    std::vector<int> primes;
    int m = n;
    for (int r = 2; r * r <= m; ++r) {
        if (m % r == 0) {
            primes.push_back(r);
            while (m % r == 0) m /= r;
        }
    }
    if (m > 1) primes.push_back(m);
    for (int r : primes) {
        Vec<F> h = x;
        for (int k = 0; k < n / r; ++k) h = powmod(f, h, p, poly);
        Vec<F> g = gcd(f, poly, sub(f, h, x));
        if (!is_one(f, g)) return false;
    }
    Vec<F> h = x;
    for (int k = 0; k < n; ++k) h = powmod(f, h, p, poly);
    return rem(f, sub(f, h, x), poly).empty();
}

template <class Fn>
auto with_field(const Integer& p, Fn&& fn) {
    if (p > 1 && p < from_u64(WordField::kLimit)) return fn(WordField{to_u64(p)});
    return fn(BigField{p});
}

} // namespace maxgal::detail
