#pragma once

// Randomised property suites shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <string>

namespace props {

struct Outcome {
    int trials = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return trials > 0 && failures == 0; }
    void fail(const std::string& why) {
        if (failures++ == 0) first_failure = why;
    }
};

/// Hensel lifts of random coprime factorizations: product, reductions, uniqueness.
Outcome hensel_lifts(std::uint64_t seed, int trials);
/// Factorizations over F_p: product recovers the input, factors monic irreducible.
Outcome fp_factorizations(std::uint64_t seed, int trials);
/// Block-cyclic T on k subspaces: charpoly(T)(x) = charpoly(T^k on V_1)(x^k).
Outcome block_cycle_charpoly(std::uint64_t seed, int trials);
/// (M - 1)^2 = 0 forces order 1 or l, and maps cycling k >= 2 subspaces fail it.
Outcome square_zero_unipotent(std::uint64_t seed, int trials);
/// witness_poly followed by recognize_type on random type specs.
Outcome type_round_trip(std::uint64_t seed, int trials);
/// Eigenvalue and cluster dimension bookkeeping on every type picture with sum q <= max_sum.
Outcome eigenvalue_bookkeeping(int max_sum);

} // namespace props
