#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maxgal/arith/integer.hpp"
#include "maxgal/arith/residue_poly.hpp"
#include "maxgal/arith/zpoly.hpp"
#include "maxgal/goldbach.hpp"
#include "maxgal/localtypes.hpp"

namespace maxgal {

/// Auxiliary primes of the construction.
struct PrimePlan {
    int g = 0;
    GoldbachTuple tuple;
    Integer p_t, p_t2;   // type 1-{2}
    Integer p2, p2p;     // type 1-{q1,q2} and 1-{q4,q5}
    Integer p3, p3p;     // type 2-{q3} and 2-{q5}
    Integer p_irr, p_lin;

    friend bool operator==(const PrimePlan&, const PrimePlan&) = default;
};

/// Every broken plan condition (empty when valid): primality, bounds, primitive
/// roots, p2 = p3 = 1 mod 3, and pairwise distinctness from each other, 2 and the
/// odd primes up to g.
std::vector<std::string> plan_violations(const PrimePlan& plan);
void validate_plan(const PrimePlan& plan);

/// The genus-6 choices: tuple (7,7,3,11,13), p_t=7, p_t'=11, p2=19, p2'=41,
/// p3=37, p3'=17, p_irr=23, p_lin=29.
PrimePlan fixture_plan();

/// Smallest valid primes scanning upward from each lower bound plus seed, in the
/// order p2, p3, p2', p3', p_t, p_t', p_irr, p_lin. The scan also keeps p_t,
/// p_t', p_irr and p_lin away from the q_i. Throws Error when search_limit primes
/// past the start are exhausted.
PrimePlan plan_primes(int g, const GoldbachTuple& tuple, std::uint64_t seed, std::uint64_t search_limit = 10000000);

/// {p2, p2', p3, p3'}, where f has deliberate high-multiplicity roots.
std::set<Integer> exceptional_primes(const PrimePlan& plan);

/// The local congruence menu, ordered p_t, p_t', odd l <= g, p2, p2', p3, p3',
/// p_irr, p_lin, 2.
std::vector<LocalSpec> local_spec_list(const PrimePlan& plan);

/// Product of the spec moduli.
Integer plan_modulus(const PrimePlan& plan);

struct SpecWitness {
    LocalSpec spec;
    ResiduePoly witness;

    friend bool operator==(const SpecWitness&, const SpecWitness&) = default;
};

/// The eleven genus-6 witnesses, in local_spec_list order.
std::vector<SpecWitness> fixture_witnesses();

/// witness_poly for every spec, with per-spec seeds derived from seed.
std::vector<SpecWitness> build_witnesses(const std::vector<LocalSpec>& specs, int g, std::uint64_t seed,
                                         std::uint64_t budget = 100000);

struct Assembly {
    ZPoly f0;
    Integer N;
};

/// Coefficientwise CRT of the witnesses; lower coefficients in [0, N), leading 1.
Assembly assemble(const std::vector<SpecWitness>& witnesses, int g);

enum class RepairStatus { Unconditional, Conditional };
std::string to_string(RepairStatus status);

struct RepairRecord {
    /// N times the primes below 2g that do not divide N.
    Integer n_tilde;
    /// Small primes p < 2g, p not dividing N, where f needed a correction mod p.
    std::vector<Integer> small_prime_fixes;
    /// k with f += k * n_tilde * x making f', f'' coprime.
    Integer linear_nudge = 0;
    /// Constant shift f += z * n_tilde.
    Integer z = 0;
    ZPoly f;
    /// Primes found dividing Res(f', f'') outside the exceptions and n_tilde.
    std::vector<Integer> checked_primes;
    /// Primes that had a triple root before the shift.
    std::vector<Integer> repaired_primes;
    std::uint64_t scan_bound = 0;
    std::uint64_t rho_budget = 0;
    /// Unfactored part of Res(f', f''); 1 when the factorization is complete.
    Integer residual_cofactor = 1;
    RepairStatus status = RepairStatus::Unconditional;

    friend bool operator==(const RepairRecord&, const RepairRecord&) = default;
};

/// Shifts f0 by multiples of n_tilde so that f mod p has no root of multiplicity
/// above 2 at every prime p outside exceptions that divides Res(f', f'') and was
/// found by trial division up to scan_bound or by Pollard rho within rho_budget.
RepairRecord fix_multiplicities(const ZPoly& f0, const Integer& N, int g, const std::set<Integer>& exceptions,
                                std::uint64_t scan_bound, std::uint64_t rho_budget);

struct BuildOptions {
    /// Pin every choice to the genus-6 example (g must be 6).
    bool fixture = false;
    std::uint64_t seed = 0;
    std::uint64_t scan_bound = 1000000;
    std::uint64_t rho_budget = 200000;
    std::uint64_t witness_budget = 100000;
    /// Defaults to the first tuple in ascending order.
    std::optional<GoldbachTuple> tuple;
};

struct Certificate {
    int g = 0;
    bool fixture = false;
    std::uint64_t seed = 0;
    PrimePlan plan;
    std::vector<SpecWitness> specs;
    ZPoly f0;
    Integer N;
    RepairRecord repair;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Plan, witnesses, assembly and repair. Throws ExceptionalGenusError when g has
/// no (2G+eps) tuple.
Certificate build_certificate(int g, const BuildOptions& options = {});

/// Every broken certificate invariant (empty when consistent).
std::vector<std::string> certificate_violations(const Certificate& cert);

} // namespace maxgal
