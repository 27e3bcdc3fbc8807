#pragma once

// Slow, independent reference implementations used to freeze expected values
// and to cross-check the library on small inputs. Nothing here calls into the
// algorithms under test beyond plain integer arithmetic.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "maxgal/arith/integer.hpp"
#include "maxgal/arith/zpoly.hpp"

namespace oracle {

using maxgal::Integer;
using maxgal::ZPoly;

bool is_prime_trial(std::uint64_t n);
std::vector<std::uint64_t> primes_below(std::uint64_t bound);

/// Multiplicative order of a modulo prime q by repeated multiplication.
std::uint64_t order_mod(std::uint64_t a, std::uint64_t q);

/// Roots of f in F_p (p small) with multiplicities, by evaluation and synthetic division.
std::vector<std::pair<std::uint64_t, int>> roots_mod(const ZPoly& f, std::uint64_t p);

/// Irreducibility over F_p by trial division against every monic polynomial of
/// degree <= deg/2. Feasible only for tiny p and degree.
bool irreducible_by_trial(const std::vector<std::uint64_t>& f, std::uint64_t p);

/// Resultant as the determinant of the Sylvester matrix (fraction-free Bareiss).
Integer sylvester_resultant(const ZPoly& a, const ZPoly& b);

/// Even n <= bound that fail the two-decomposition property, by direct search.
std::set<std::uint64_t> goldbach_exceptions(std::uint64_t bound);

/// Polynomial over F_p multiplication and reduction on plain vectors (ascending).
std::vector<std::uint64_t> mul_mod(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                   std::uint64_t p);
std::vector<std::uint64_t> rem_mod(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b,
                                   std::uint64_t p);

} // namespace oracle
