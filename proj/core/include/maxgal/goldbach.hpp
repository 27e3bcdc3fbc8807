#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace maxgal {

/// Five primes with 2g+2 = q1+q2 = q4+q5 and q4 < q1 <= q2 < q5 < q3 < 2g+2.
struct GoldbachTuple {
    int g = 0;
    std::uint64_t q1 = 0, q2 = 0, q3 = 0, q4 = 0, q5 = 0;

    friend bool operator==(const GoldbachTuple&, const GoldbachTuple&) = default;
    std::string to_string() const;
};

/// Empty when the tuple is valid for its genus, otherwise the first broken condition.
std::string tuple_violation(const GoldbachTuple& tuple);
bool is_valid(const GoldbachTuple& tuple);

/// Unordered prime pairs a <= b with a + b = n, ascending in a.
/// Throws PreconditionError unless n is even and n >= 4.
std::vector<std::pair<std::uint64_t, std::uint64_t>> goldbach_pairs(std::uint64_t n);

/// Largest prime strictly below n (0 if none).
std::uint64_t largest_prime_below(std::uint64_t n);

/// True iff the even number n has two distinct unordered prime-pair decompositions
/// neither of which uses the largest prime below n. 0 and 2 fail by convention.
bool conjecture_holds(std::uint64_t n);

/// Every (2G+eps) tuple for genus g, ascending in (q1, q2, q4, q5, q3).
std::vector<GoldbachTuple> two_g_eps_tuples(int g);

/// The weaker (G+eps) data: primes q1 <= q2 < q3 < 2g+2 with q1 + q2 = 2g+2.
struct GEpsTriple {
    std::uint64_t q1 = 0, q2 = 0, q3 = 0;
};
std::vector<GEpsTriple> g_eps_triples(int g);

/// Even n with 4 <= n <= bound for which conjecture_holds fails.
std::set<std::uint64_t> verify_range(std::uint64_t bound);

} // namespace maxgal
