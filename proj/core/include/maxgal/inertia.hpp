#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maxgal/arith/integer.hpp"
#include "maxgal/arith/zpoly.hpp"

namespace maxgal {

/// One cluster of roots. Roots are labelled 0 .. root_count-1.
struct Cluster {
    std::vector<int> roots;
    Rational depth;
    /// Index of the parent cluster, -1 for the top cluster.
    int parent = -1;
};

/// Clusters of size >= 2; singletons are implicit. clusters[0] is the full root set.
struct ClusterPicture {
    int root_count = 0;
    std::vector<Cluster> clusters;

    std::vector<int> children(int index) const;
    /// Roots of clusters[index] not covered by any child cluster.
    int singleton_children(int index) const;
};

/// Empty when the picture is laminar with a top cluster and increasing depths.
std::string picture_violation(const ClusterPicture& picture);

/// Picture of a polynomial of degree deg with type t-{q_1,...,q_k}: the full set at
/// depth 0 and one cluster of size q_i at depth t/q_i per block. Block degrees
/// must be primes coprime to t (so 2 only for odd t).
ClusterPicture clusters_from_type(int t, const std::vector<Integer>& qs, int deg);

/// Picture of a polynomial whose reduction has d double roots and otherwise simple
/// roots: the full set at depth 0 and d pairs at the given depth.
ClusterPicture clusters_from_double_roots(int d, int deg, const Rational& depth = Rational(1, 2));

enum class EpsilonKind { Trivial, OrderTwo, Zero };
std::string to_string(EpsilonKind kind);

struct ClusterInvariants {
    Rational d;
    Rational mu;
    Rational lambda;
    EpsilonKind epsilon = EpsilonKind::Zero;
    Integer gamma_order = 1;
    /// Number of maximal odd-size subclusters.
    int odd_children = 0;
    int v_dim = 0;
};

/// Invariants of clusters[index] for the two-level pictures above.
/// p is the residue characteristic (0 to skip removing p from gamma's order).
/// Throws Error "outside supported cluster family" for other shapes.
ClusterInvariants cluster_invariants(const ClusterPicture& picture, int index, const Integer& p = 0);

struct EtaleDimensions {
    int h1_ab = 0;
    int h1_t = 0;
};

/// Dimensions of the abelian and toric parts, summed over the clusters that are
/// neither singletons nor unions of even children. Satisfies h1_ab + 2 h1_t = 2g.
EtaleDimensions etale_decomposition(const ClusterPicture& picture, int g, const Integer& p = 0);

/// sign * zeta_order^exponent.
struct RootOfUnity {
    int sign = 1;
    Integer order = 1;
    Integer exponent = 0;

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    std::string to_string() const;
};

struct EigenvalueMultiset {
    std::vector<RootOfUnity> entries;
    int trivial = 0;
    /// The action factors through a quotient whose order divides this.
    Integer order_divisor = 1;

    int size() const { return static_cast<int>(entries.size()) + trivial; }
};

/// Eigenvalues of a tame inertia generator on the 2g-dimensional module when f has
/// type t-{q_1,...,q_k} with odd primes q_i coprime to t.
EigenvalueMultiset tame_eigenvalues(int t, const std::vector<Integer>& qs, int g);

/// { sum a_i p^i : 0 <= a_i <= e, 0 <= i < n }.
std::set<Integer> raynaud_exponents(const Integer& p, int n, int e);

enum class ReductionStatus { Semistable, Unknown };

struct SemistabilityResult {
    ReductionStatus status = ReductionStatus::Unknown;
    std::optional<int> toric_dim;
    int double_roots = 0;
};

/// Multiplicities <= 2 with d double roots give semistable reduction of toric
/// dimension min(d, g); anything else is reported as unknown.
SemistabilityResult semistable_from_reduction(const ZPoly& f, const Integer& p, int g);

/// f has type 1-{2} at the odd prime p, so inertia at p acts as a transvection.
bool transvection_at(const ZPoly& f, const Integer& p);

enum class AdmissibilityCase { Semistable, TypeOddT, TypeTwoQ, TotallyToric };

struct AdmissibilityContext {
    AdmissibilityCase kind = AdmissibilityCase::Semistable;
    int t = 0;
    std::vector<Integer> qs;
};

struct AdmissibilityFlags {
    /// Admissible at p, i.e. for every odd l != p.
    bool admissible = false;
    /// p-admissible at p (the l = p case), over Q where e = 1.
    bool p_admissible = false;
    /// Which sufficient conditions fired or failed.
    std::vector<std::string> notes;
};

AdmissibilityFlags admissibility_flags(const Integer& p, int g, const AdmissibilityContext& context);

} // namespace maxgal
