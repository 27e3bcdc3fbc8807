#pragma once

#include "maxgal/arith/integer.hpp"
#include "maxgal/arith/zpoly.hpp"

namespace maxgal {

/// Res(a, b) by the subresultant remainder sequence; exact, no fractions.
/// Throws PreconditionError if either argument is zero.
Integer resultant(const ZPoly& a, const ZPoly& b);

/// Discriminant-style helper: Res(f', f'').
Integer derivative_resultant(const ZPoly& f);

} // namespace maxgal
