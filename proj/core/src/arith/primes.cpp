#include "maxgal/arith/primes.hpp"

#include <random>

#include "maxgal/error.hpp"

namespace maxgal {

namespace detail {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint64_t> sieve_base(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<char> composite(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return out;
}

} // namespace detail

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for_each_prime(2, bound, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

namespace {

constexpr std::uint64_t kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// One Miller-Rabin round: n odd > 3, n - 1 = d * 2^s.
bool strong_probable_prime(const Integer& n, const Integer& d, unsigned long s, const Integer& base) {
    Integer x = powmod(base, d, n);
    const Integer n1 = n - 1;
    if (x == 1 || x == n1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = mod(x * x, n);
        if (x == n1) return true;
        if (x == 1) return false;
    }
    return false;
}

} // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (std::uint64_t p : kSmallPrimes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    if (fits_u64(n)) {
        for (std::uint64_t p : kSmallPrimes) {
            if (!strong_probable_prime(n, d, s, from_u64(p))) return false;
        }
        return true;
    }
    std::mt19937_64 rng(0x6d61786761ULL);
    const Integer span = n - 3;
    for (int round = 0; round < 64; ++round) {
        Integer acc = 0;
        std::size_t words = mpz_sizeinbase(n.get_mpz_t(), 2) / 64 + 2;
        for (std::size_t i = 0; i < words; ++i) acc = (acc << 64) + from_u64(rng());
        Integer base = mod(acc, span) + 2;
        if (!strong_probable_prime(n, d, s, base)) return false;
    }
    return true;
}

Integer next_prime(const Integer& n) {
    Integer c = n + 1;
    if (c <= 2) return 2;
    if (mpz_even_p(c.get_mpz_t())) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

namespace {

// Brent's cycle-finding rho with x -> x^2 + c. Returns 0 when the budget runs out,
// otherwise a divisor of n (possibly n itself).
Integer brent_rho(const Integer& n, const Integer& c, std::uint64_t& budget) {
    auto step = [&](const Integer& v) { return mod(v * v + c, n); };
    Integer y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    do {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) {
            if (budget == 0) return 0;
            --budget;
            y = step(y);
        }
        std::uint64_t k = 0;
        do {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                if (budget == 0) return 0;
                --budget;
                y = step(y);
                Integer diff = x - y;
                q = mod(q * abs(diff), n);
            }
            g = gcd(q, n);
            k += m;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);
    if (g == n) {
        do {
            if (budget == 0) return 0;
            --budget;
            ys = step(ys);
            Integer diff = x - ys;
            g = gcd(abs(diff), n);
        } while (g == 1);
    }
    return g;
}

void add_prime(std::map<Integer, unsigned>& out, const Integer& p, unsigned e) { out[p] += e; }

} // namespace

PartialFactorization pollard_factor(const Integer& n, std::uint64_t budget) {
    if (n < 1) throw PreconditionError("pollard_factor needs n >= 1");
    PartialFactorization out;
    Integer rest = n;
    for (std::uint64_t p = 2; p < 1000 && rest > 1; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e) add_prime(out.primes, from_u64(p), e);
    }
    std::vector<Integer> pending;
    if (rest > 1) pending.push_back(rest);
    while (!pending.empty()) {
        Integer m = pending.back();
        pending.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            add_prime(out.primes, m, 1);
            continue;
        }
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            Integer root = sqrt(m);
            pending.push_back(root);
            pending.push_back(root);
            continue;
        }
        Integer divisor = 0;
        for (unsigned long c = 1; c < 64 && budget > 0; ++c) {
            Integer g = brent_rho(m, Integer(c), budget);
            if (g == 0) break;
            if (g != m) {
                divisor = g;
                break;
            }
        }
        if (divisor == 0) {
            out.cofactor *= m;
            continue;
        }
        pending.push_back(divisor);
        pending.push_back(m / divisor);
    }
    return out;
}

std::map<Integer, unsigned> factor_small(const Integer& n) {
    auto f = pollard_factor(n, kUnlimitedBudget);
    if (!f.complete()) throw Error("factor_small failed to factor " + to_string(n));
    return f.primes;
}

bool is_primitive_root(const Integer& a, const Integer& q) {
    if (!is_prime(q)) throw PreconditionError(to_string(q) + " is not prime");
    Integer r = mod(a, q);
    if (r == 0) return false;
    if (q == 2) return r == 1;
    const Integer order = q - 1;
    for (const auto& [prime, exponent] : factor_small(order)) {
        (void)exponent;
        if (powmod(r, order / prime, q) == 1) return false;
    }
    return true;
}

} // namespace maxgal
