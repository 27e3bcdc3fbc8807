#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace maxgal {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;
/// Exact rational, used for cluster depths.
using Rational = mpq_class;

/// Parses a decimal string (optional leading '-'); throws PreconditionError on junk.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Least nonnegative residue of value modulo m (m > 0).
Integer mod(const Integer& value, const Integer& m);

Integer pow(const Integer& base, unsigned long exponent);
Integer powmod(const Integer& base, const Integer& exponent, const Integer& m);

/// Inverse of a modulo m; throws PreconditionError if gcd(a, m) != 1.
Integer invmod(const Integer& a, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// p-adic valuation of n (n != 0, p >= 2). Returns -1 for n == 0.
long valuation(const Integer& n, const Integer& p);

bool fits_u64(const Integer& value);
std::uint64_t to_u64(const Integer& value);
Integer from_u64(std::uint64_t value);

} // namespace maxgal
