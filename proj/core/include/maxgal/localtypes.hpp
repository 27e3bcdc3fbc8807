#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxgal/arith/integer.hpp"
#include "maxgal/arith/residue_poly.hpp"
#include "maxgal/arith/zpoly.hpp"

namespace maxgal {

enum class LocalKind { Type, DoubleRoots, Irreducible, LinearTimesIrreducible, GoodReduction2 };

std::string to_string(LocalKind kind);
/// Inverse of to_string; throws PreconditionError on unknown names.
LocalKind parse_local_kind(const std::string& name);

/// A prescribed shape of f modulo p^m.
struct LocalSpec {
    LocalKind kind = LocalKind::Irreducible;
    Integer p = 2;
    int m = 1;
    /// Type only.
    int t = 0;
    std::vector<Integer> qs;
    /// DoubleRoots only: number of double roots over the algebraic closure.
    int count = 0;

    static LocalSpec type(const Integer& p, int t, std::vector<Integer> qs);
    static LocalSpec double_roots(const Integer& p, int count);
    static LocalSpec irreducible(const Integer& p);
    static LocalSpec linear_times_irreducible(const Integer& p);
    static LocalSpec good_reduction_2(int g);

    Integer modulus() const { return pow(p, static_cast<unsigned long>(m)); }
    /// e.g. "type 2-{13} at 37 (mod 37^3)".
    std::string describe() const;

    friend bool operator==(const LocalSpec&, const LocalSpec&) = default;
};

/// Empty if spec is well formed for genus g, else the reason.
std::string spec_violation(const LocalSpec& spec, int g);
/// Throws PreconditionError with spec_violation's message.
void validate(const LocalSpec& spec, int g);

/// Factorization f = prod_i g_i(x - alpha_i) * h modulo p^(t+1).
struct TypeWitness {
    Integer p;
    int t = 0;
    /// Block degrees in the order they were requested.
    std::vector<Integer> qs;
    /// Roots of the blocks in F_p.
    std::vector<Integer> shifts;
    /// alpha_i modulo p^(t+1), reducing to shifts[i].
    std::vector<Integer> centers;
    /// g_i, each t-Eisenstein modulo p^(t+1).
    std::vector<ResiduePoly> blocks;
    /// h, separable modulo p and coprime to the blocks.
    ResiduePoly cofactor;
};

/// v_p(a_i) >= t for 0 < i < deg and v_p(a_0) == t. f must be monic of degree >= 1.
bool is_t_eisenstein(const ZPoly& f, const Integer& p, int t);
/// Same test for coefficients known modulo f.modulus(); throws Error
/// "insufficient modulus" unless p^(t+1) divides it.
bool is_t_eisenstein(const ResiduePoly& f, const Integer& p, int t);

/// Decides whether f has type t-{q_1,...,q_k} at the odd prime p, looking only
/// at f modulo p^(t+1). Block roots must lie in F_p.
std::optional<TypeWitness> recognize_type(const ZPoly& f, const Integer& p, int t, const std::vector<Integer>& qs);

struct WitnessOptions {
    /// Maximum number of random candidates a search may draw.
    std::uint64_t budget = 100000;
    /// Replaces the searched cofactor of a Type spec (reduced modulo p^m).
    std::optional<ZPoly> cofactor;
};

/// A monic degree 2g+2 polynomial modulo spec.modulus() realizing spec.
/// Random choices come from mt19937_64(seed). Throws Error "no witness found"
/// when the budget runs out.
ResiduePoly witness_poly(const LocalSpec& spec, int g, std::uint64_t seed, const WitnessOptions& options = {});

/// True iff f (monic, degree 2g+2) has the shape spec describes.
bool realizes(const ZPoly& f, const LocalSpec& spec, int g);

/// Multiplicities of the roots of f mod p over the algebraic closure, one entry
/// per root, ascending. Throws PreconditionError if f vanishes mod p.
std::vector<int> multiplicity_profile(const ZPoly& f, const Integer& p);

/// Largest entry of multiplicity_profile.
int max_multiplicity(const ZPoly& f, const Integer& p);

/// a_0 = 2^(2g) mod 2^(2g+2), a_(2g+1) = 2 mod 4 and a_i = 0 mod 2^(2g+2-i) for
/// 1 <= i <= 2g. Throws PreconditionError unless f is monic of degree 2g+2.
bool good_reduction_at_2(const ZPoly& f, int g);

} // namespace maxgal
