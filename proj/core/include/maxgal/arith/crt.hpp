#pragma once

#include <utility>
#include <vector>

#include "maxgal/arith/integer.hpp"

namespace maxgal {

/// A congruence x = value (mod modulus).
using Congruence = std::pair<Integer, Integer>;

/// Smallest nonnegative solution of the system, which is unique modulo the lcm
/// of the moduli (their product when pairwise coprime). Moduli that share a
/// factor are accepted when the residues agree; otherwise throws Error
/// "inconsistent congruence".
Integer crt_integers(const std::vector<Congruence>& residues);

} // namespace maxgal
