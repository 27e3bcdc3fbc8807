#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "maxgal/arith/fp_poly.hpp"
#include "maxgal/arith/integer.hpp"
#include "maxgal/arith/zpoly.hpp"

namespace maxgal {

/// f = unit * prod factor^multiplicity, factors monic irreducible, sorted by
/// (degree, coefficients).
struct Factorization {
    Integer prime;
    Integer unit;
    std::vector<std::pair<FpPoly, int>> factors;

    FpPoly product() const;
    /// Degrees of the irreducible factors counted with multiplicity, ascending.
    std::vector<int> degree_pattern() const;
};

/// Complete factorization over F_p: square-free decomposition, distinct-degree
/// splitting, then Cantor-Zassenhaus with an mt19937_64 seeded from seed.
/// Throws PreconditionError if p is not prime or f is zero.
Factorization fp_factor(const FpPoly& f, const Integer& seed = 0);

/// Pairs (g_i, i) with monic(f) = prod g_i^i, each g_i square-free and the g_i
/// pairwise coprime.
std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f);

/// Largest multiplicity of a root of f mod p over the algebraic closure.
/// Uses machine-word arithmetic; p must be a prime below 2^62 and f mod p nonzero.
int max_root_multiplicity(const ZPoly& f, std::uint64_t p);

} // namespace maxgal
