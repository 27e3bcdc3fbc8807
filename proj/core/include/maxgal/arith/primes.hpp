#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "maxgal/arith/integer.hpp"

namespace maxgal {

/// All primes p <= bound in increasing order (segmented sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Calls visit(p) for each prime lo <= p <= hi in increasing order, one sieve
/// segment at a time, without materialising the whole list.
template <class Visit>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, Visit&& visit);

/// Miller-Rabin. Deterministic for n < 2^64 (first twelve prime bases);
/// above that, 64 bases drawn from a fixed-seed generator, so the answer is
/// probabilistic but reproducible.
bool is_prime(const Integer& n);

/// Smallest prime strictly greater than n.
Integer next_prime(const Integer& n);

constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

struct PartialFactorization {
    std::map<Integer, unsigned> primes;
    /// Product of the composite parts the budget could not split (1 when complete).
    Integer cofactor = 1;

    bool complete() const { return cofactor == 1; }
};

/// Trial division by small primes, then Brent's variant of Pollard rho.
/// budget caps the total number of rho iterations across all splits.
PartialFactorization pollard_factor(const Integer& n, std::uint64_t budget = kUnlimitedBudget);

/// Full factorization, for arguments small enough that this is cheap (group orders q-1).
std::map<Integer, unsigned> factor_small(const Integer& n);

/// True iff a has multiplicative order q-1 modulo the prime q.
/// Throws PreconditionError when q is not prime.
bool is_primitive_root(const Integer& a, const Integer& q);

} // namespace maxgal

#include "maxgal/arith/primes_inl.hpp"
