#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maxgal/arith/integer.hpp"
#include "maxgal/arith/zpoly.hpp"
#include "maxgal/construct.hpp"

namespace maxgal {

/// Hypotheses on (f, plan), in report order. GEps is the single-pair
/// Goldbach condition used by the partial theorem.
enum class Hypothesis { TwoGEps, GEps, TwoT, TT, P2, P3, P2Prime, P3Prime, Three, Symmetric, SS };

std::string to_string(Hypothesis h);
Hypothesis parse_hypothesis(const std::string& name);
const std::vector<Hypothesis>& all_hypotheses();

enum class FlagStatus { Pass, Fail, Conditional };
std::string to_string(FlagStatus s);
FlagStatus parse_flag_status(const std::string& name);

struct Flag {
    Hypothesis hypothesis;
    FlagStatus status = FlagStatus::Fail;
    std::string evidence;

    bool holds() const { return status != FlagStatus::Fail; }
    friend bool operator==(const Flag&, const Flag&) = default;
};

struct ScanSummary {
    std::uint64_t bound = 0;
    std::uint64_t rho_budget = 0;
    /// Primes outside the exceptional set where f has a root of multiplicity >= 3.
    std::vector<Integer> bad_primes;
    /// Primes above the bound found in Res(f', f'').
    std::vector<Integer> resultant_primes;
    /// Unsplit part of Res(f', f'') above the bound (1 when fully factored).
    Integer residual_cofactor = 1;
    bool resultant_zero = false;

    friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

struct VerificationReport {
    int g = 0;
    std::vector<Flag> flags;
    ScanSummary scan;
    /// Admissibility at every prime, derived from the local flags and (ss).
    bool adm = false;
    std::vector<std::string> adm_notes;
    /// Ingredients of the mod-2 argument.
    bool cycle_full = false;     // f irreducible mod p_irr
    bool cycle_minus_one = false;  // linear times irreducible mod p_lin
    bool transposition = false;  // type 1-{2} at p_t
    /// Local data the partial theorem needs for its case analysis.
    PrimePlan plan;
    std::vector<Integer> not_totally_toric;  // odd primes <= g failing (TT)
    std::vector<Integer> not_semistable;     // among p2', p3' and the bad primes

    const Flag& flag(Hypothesis h) const;
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Profile of f mod ell has exactly g twos and nothing above 2.
bool is_totally_toric(const ZPoly& f, const Integer& ell, int g);

/// Evaluates every hypothesis on f. Throws PreconditionError unless f is monic,
/// squarefree and of degree 2g+2 for g = plan.g.
VerificationReport check_hypotheses(const ZPoly& f, const PrimePlan& plan, std::uint64_t scan_bound,
                                    std::uint64_t rho_budget);

enum class VerdictKind { MaximalAll, MaximalExcept, None };
std::string to_string(VerdictKind k);
VerdictKind parse_verdict_kind(const std::string& name);

struct Verdict {
    VerdictKind kind = VerdictKind::None;
    std::set<Integer> excluded;
    /// Which theorem the conclusion comes from: "double-goldbach", "single-goldbach" or "".
    std::string theorem;
    /// Set when the conclusion rests on a (ss) scan that left a cofactor unsplit.
    bool conditional = false;
    /// Mod-2 image is the full symmetric group.
    bool symmetric_mod_2 = false;
    std::string text;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict verdict(const VerificationReport& report, int g);

/// Primes excluded by the partial construction for the genera without a
/// double Goldbach tuple. Throws PreconditionError outside {2,3,4,5,7,13}.
std::set<Integer> excluded_primes_exceptional(int g);

} // namespace maxgal
