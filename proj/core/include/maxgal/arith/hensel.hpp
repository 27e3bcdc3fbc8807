#pragma once

#include <vector>

#include "maxgal/arith/integer.hpp"
#include "maxgal/arith/residue_poly.hpp"
#include "maxgal/arith/zpoly.hpp"

namespace maxgal {

/// Lifts a factorization f = g_1 ... g_r mod p^j to the unique monic family
/// with the same reductions mod p whose product is f mod p^m.
///
/// The factors share one modulus p^j (usually j = 1) and their product must
/// agree with f modulo it; their reductions mod p must be pairwise coprime.
/// When j >= m the factors are simply reduced mod p^m.
std::vector<ResiduePoly> hensel_lift_factorization(const ZPoly& f, const std::vector<ResiduePoly>& factors,
                                                   const Integer& p, unsigned m);

} // namespace maxgal
