#include "maxgal/goldbach.hpp"

#include <algorithm>

#include "maxgal/arith/primes.hpp"
#include "maxgal/error.hpp"

namespace maxgal {

namespace {

bool prime_u64(std::uint64_t n) { return is_prime(from_u64(n)); }

// Primality table for [0, bound].
std::vector<char> prime_table(std::uint64_t bound) {
    std::vector<char> table(bound + 1, 0);
    for_each_prime(2, bound, [&](std::uint64_t p) { table[p] = 1; });
    return table;
}

} // namespace

std::string GoldbachTuple::to_string() const {
    return "(q1,q2,q4,q5,q3)=(" + std::to_string(q1) + "," + std::to_string(q2) + "," + std::to_string(q4) + "," +
           std::to_string(q5) + "," + std::to_string(q3) + ")";
}

std::string tuple_violation(const GoldbachTuple& t) {
    if (t.g < 1) return "genus must be positive";
    const std::uint64_t n = 2 * static_cast<std::uint64_t>(t.g) + 2;
    for (std::uint64_t q : {t.q1, t.q2, t.q3, t.q4, t.q5}) {
        if (!prime_u64(q)) return std::to_string(q) + " is not prime";
    }
    if (t.q1 + t.q2 != n) return "q1 + q2 != 2g+2";
    if (t.q4 + t.q5 != n) return "q4 + q5 != 2g+2";
    if (!(t.q4 < t.q1 && t.q1 <= t.q2 && t.q2 < t.q5 && t.q5 < t.q3 && t.q3 < n)) {
        return "ordering q4 < q1 <= q2 < q5 < q3 < 2g+2 fails";
    }
    return {};
}

bool is_valid(const GoldbachTuple& tuple) { return tuple_violation(tuple).empty(); }

std::vector<std::pair<std::uint64_t, std::uint64_t>> goldbach_pairs(std::uint64_t n) {
    if (n < 4 || n % 2 != 0) throw PreconditionError("goldbach_pairs needs an even n >= 4, got " + std::to_string(n));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for_each_prime(2, n / 2, [&](std::uint64_t a) {
        if (prime_u64(n - a)) out.emplace_back(a, n - a);
    });
    return out;
}

std::uint64_t largest_prime_below(std::uint64_t n) {
    for (std::uint64_t m = n; m-- > 2;) {
        if (prime_u64(m)) return m;
    }
    return 0;
}

bool conjecture_holds(std::uint64_t n) {
    if (n % 2 != 0) throw PreconditionError("conjecture_holds needs an even n, got " + std::to_string(n));
    if (n < 4) return false;
    const std::uint64_t top = largest_prime_below(n);
    int ways = 0;
    for (const auto& [a, b] : goldbach_pairs(n)) {
        if (a != top && b != top) ++ways;
    }
    return ways >= 2;
}

std::vector<GoldbachTuple> two_g_eps_tuples(int g) {
    if (g < 1) throw PreconditionError("genus must be positive");
    const std::uint64_t n = 2 * static_cast<std::uint64_t>(g) + 2;
    const auto pairs = goldbach_pairs(n);
    std::vector<std::uint64_t> below;
    for_each_prime(2, n - 1, [&](std::uint64_t p) { below.push_back(p); });
    std::vector<GoldbachTuple> out;
    for (const auto& [q1, q2] : pairs) {
        for (const auto& [q4, q5] : pairs) {
            if (!(q4 < q1 && q2 < q5)) continue;
            for (std::uint64_t q3 : below) {
                if (q3 <= q5) continue;
                GoldbachTuple t{g, q1, q2, q3, q4, q5};
                out.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const GoldbachTuple& a, const GoldbachTuple& b) {
        return std::tie(a.q1, a.q2, a.q4, a.q5, a.q3) < std::tie(b.q1, b.q2, b.q4, b.q5, b.q3);
    });
    return out;
}

std::vector<GEpsTriple> g_eps_triples(int g) {
    if (g < 1) throw PreconditionError("genus must be positive");
    const std::uint64_t n = 2 * static_cast<std::uint64_t>(g) + 2;
    std::vector<GEpsTriple> out;
    for (const auto& [q1, q2] : goldbach_pairs(n)) {
        for_each_prime(q2 + 1, n - 1, [&](std::uint64_t q3) { out.push_back({q1, q2, q3}); });
    }
    return out;
}

std::set<std::uint64_t> verify_range(std::uint64_t bound) {
    if (bound < 4) throw PreconditionError("verify_range needs a bound >= 4");
    const std::vector<char> prime = prime_table(bound);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (prime[i]) primes.push_back(i);
    }
    std::set<std::uint64_t> out;
    std::uint64_t top = 3;  // largest prime below the current n
    for (std::uint64_t n = 4; n <= bound; n += 2) {
        if (prime[n - 1]) top = n - 1;
        int ways = 0;
        for (std::uint64_t a : primes) {
            if (2 * a > n) break;
            const std::uint64_t b = n - a;
            if (prime[b] && a != top && b != top && ++ways == 2) break;
        }
        if (ways < 2) out.insert(n);
    }
    return out;
}

} // namespace maxgal
