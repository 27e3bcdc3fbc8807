#include "maxgal/inertia.hpp"

#include <algorithm>
#include <numeric>

#include "maxgal/arith/primes.hpp"
#include "maxgal/error.hpp"
#include "maxgal/localtypes.hpp"

namespace maxgal {

namespace {

const char* const kUnsupported = "outside supported cluster family";

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common.empty();
}

// Two-level pictures: every proper cluster hangs off the top and has only singleton children.
void require_supported(const ClusterPicture& pic) {
    if (!picture_violation(pic).empty()) throw Error(kUnsupported);
    for (std::size_t i = 1; i < pic.clusters.size(); ++i) {
        if (pic.clusters[i].parent != 0) throw Error(kUnsupported);
    }
}

// 2-adic valuation of a nonzero rational.
long ord2(const Rational& r) {
    return valuation(r.get_num(), Integer(2)) - valuation(r.get_den(), Integer(2));
}

Integer strip_prime(Integer n, const Integer& p) {
    if (p > 1) {
        while (mod(n, p) == 0) n /= p;
    }
    return n;
}

void check_block_degrees(int t, const std::vector<Integer>& qs, bool allow_two) {
    if (t < 1) throw PreconditionError("type needs t >= 1");
    for (const auto& q : qs) {
        if (!is_prime(q)) throw PreconditionError("block degree " + to_string(q) + " is not prime");
        if (gcd(q, Integer(t)) != 1) throw PreconditionError("block degree " + to_string(q) + " is not coprime to t");
        if (q == 2 && !allow_two) throw PreconditionError("block degrees must be odd primes");
    }
}

} // namespace

std::vector<int> ClusterPicture::children(int index) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (clusters[i].parent == index) out.push_back(static_cast<int>(i));
    }
    return out;
}

int ClusterPicture::singleton_children(int index) const {
    int covered = 0;
    for (int c : children(index)) covered += static_cast<int>(clusters[static_cast<std::size_t>(c)].roots.size());
    return static_cast<int>(clusters[static_cast<std::size_t>(index)].roots.size()) - covered;
}

std::string picture_violation(const ClusterPicture& pic) {
    if (pic.root_count < 1 || pic.clusters.empty()) return "picture has no top cluster";
    std::vector<int> all(static_cast<std::size_t>(pic.root_count));
    std::iota(all.begin(), all.end(), 0);
    const Cluster& top = pic.clusters[0];
    if (top.roots != all || top.parent != -1) return "first cluster must be the full root set";
    for (std::size_t i = 0; i < pic.clusters.size(); ++i) {
        const Cluster& c = pic.clusters[i];
        if (!std::is_sorted(c.roots.begin(), c.roots.end()) ||
            std::adjacent_find(c.roots.begin(), c.roots.end()) != c.roots.end()) {
            return "cluster roots must be sorted and distinct";
        }
        if (i == 0) continue;
        if (c.roots.size() < 2) return "singleton clusters are implicit";
        if (c.parent < 0 || static_cast<std::size_t>(c.parent) >= pic.clusters.size() ||
            static_cast<std::size_t>(c.parent) == i) {
            return "bad parent index";
        }
        const Cluster& parent = pic.clusters[static_cast<std::size_t>(c.parent)];
        if (!subset(c.roots, parent.roots) || c.roots.size() == parent.roots.size()) {
            return "cluster is not a proper subset of its parent";
        }
        if (c.depth <= parent.depth) return "child depth must exceed parent depth";
        for (std::size_t j = 1; j < i; ++j) {
            const auto& other = pic.clusters[j].roots;
            if (!disjoint(c.roots, other) && !subset(c.roots, other) && !subset(other, c.roots)) {
                return "clusters are not nested";
            }
        }
    }
    return {};
}

ClusterPicture clusters_from_type(int t, const std::vector<Integer>& qs, int deg) {
    check_block_degrees(t, qs, t % 2 == 1);
    Integer total = 0;
    for (const auto& q : qs) total += q;
    if (total > deg) throw PreconditionError("block degrees exceed the degree");

    ClusterPicture pic;
    pic.root_count = deg;
    std::vector<int> all(static_cast<std::size_t>(deg));
    std::iota(all.begin(), all.end(), 0);
    if (qs.size() == 1 && total == deg) {
        // the single block is the whole root set
        Rational depth(t, qs[0].get_ui());
        depth.canonicalize();
        pic.clusters.push_back({all, depth, -1});
        return pic;
    }
    pic.clusters.push_back({all, Rational(0), -1});
    int next = 0;
    for (const auto& q : qs) {
        std::vector<int> roots;
        for (unsigned long i = 0; i < q.get_ui(); ++i) roots.push_back(next++);
        Rational depth(t, q.get_ui());
        depth.canonicalize();
        pic.clusters.push_back({roots, depth, 0});
    }
    return pic;
}

ClusterPicture clusters_from_double_roots(int d, int deg, const Rational& depth) {
    if (d < 0 || 2 * d > deg) throw PreconditionError("double roots do not fit the degree");
    if (depth <= 0) throw PreconditionError("pair depth must be positive");
    ClusterPicture pic;
    pic.root_count = deg;
    std::vector<int> all(static_cast<std::size_t>(deg));
    std::iota(all.begin(), all.end(), 0);
    pic.clusters.push_back({all, Rational(0), -1});
    for (int i = 0; i < d; ++i) pic.clusters.push_back({{2 * i, 2 * i + 1}, depth, 0});
    return pic;
}

std::string to_string(EpsilonKind kind) {
    switch (kind) {
    case EpsilonKind::Trivial: return "trivial";
    case EpsilonKind::OrderTwo: return "order_two";
    case EpsilonKind::Zero: return "zero";
    }
    return "unknown";
}

ClusterInvariants cluster_invariants(const ClusterPicture& pic, int index, const Integer& p) {
    require_supported(pic);
    if (index < 0 || static_cast<std::size_t>(index) >= pic.clusters.size()) {
        throw PreconditionError("cluster index out of range");
    }
    const Cluster& s = pic.clusters[static_cast<std::size_t>(index)];
    const int size = static_cast<int>(s.roots.size());
    ClusterInvariants out;
    out.d = s.depth;
    // Roots outside a child meet it in the top cluster, at the top depth.
    out.mu = index == 0 ? Rational(0) : Rational(pic.root_count - size) * pic.clusters[0].depth;

    out.odd_children = pic.singleton_children(index);
    for (int c : pic.children(index)) {
        if (pic.clusters[static_cast<std::size_t>(c)].roots.size() % 2 == 1) ++out.odd_children;
    }
    out.lambda = (out.mu + out.d * out.odd_children) / 2;

    if (size % 2 == 1) {
        out.epsilon = EpsilonKind::Zero;
    } else if (out.mu == 0 || ord2(out.mu) >= 1) {
        out.epsilon = EpsilonKind::Trivial;
    } else {
        out.epsilon = EpsilonKind::OrderTwo;
    }
    out.gamma_order = out.lambda == 0 ? Integer(1) : strip_prime(out.lambda.get_den(), p);
    const int eps_dim = out.epsilon == EpsilonKind::Zero ? 0 : 1;
    out.v_dim = std::max(0, out.odd_children - 1 - eps_dim);
    return out;
}

EtaleDimensions etale_decomposition(const ClusterPicture& pic, int g, const Integer& p) {
    require_supported(pic);
    if (pic.root_count != 2 * g + 1 && pic.root_count != 2 * g + 2) {
        throw PreconditionError("picture does not have 2g+1 or 2g+2 roots");
    }
    EtaleDimensions out;
    for (std::size_t i = 0; i < pic.clusters.size(); ++i) {
        const int idx = static_cast<int>(i);
        const auto kids = pic.children(idx);
        bool even_union = pic.singleton_children(idx) == 0 && !kids.empty();
        for (int c : kids) even_union = even_union && pic.clusters[static_cast<std::size_t>(c)].roots.size() % 2 == 0;
        if (even_union) continue;
        const auto inv = cluster_invariants(pic, idx, p);
        out.h1_ab += inv.v_dim;
        out.h1_t += inv.epsilon == EpsilonKind::Zero ? 0 : 1;
    }
    if (cluster_invariants(pic, 0, p).epsilon != EpsilonKind::Zero) out.h1_t -= 1;
    if (out.h1_ab + 2 * out.h1_t != 2 * g) throw Error("dimension count does not add up to 2g");
    return out;
}

std::string RootOfUnity::to_string() const {
    std::string s = sign < 0 ? "-" : "";
    if (order == 1) return s + "1";
    return s + "zeta_" + maxgal::to_string(order) + "^" + maxgal::to_string(exponent);
}

EigenvalueMultiset tame_eigenvalues(int t, const std::vector<Integer>& qs, int g) {
    if (g < 1) throw PreconditionError("genus must be positive");
    check_block_degrees(t, qs, false);
    EigenvalueMultiset out;
    const int sign = t % 2 == 1 ? -1 : 1;
    int nontrivial = 0;
    out.order_divisor = 2;
    for (const auto& q : qs) {
        for (Integer j = 1; j < q; ++j) out.entries.push_back({sign, q, j});
        nontrivial += static_cast<int>(q.get_si()) - 1;
        out.order_divisor *= q;
    }
    if (nontrivial > 2 * g) throw PreconditionError("blocks need more than 2g eigenvalues");
    out.trivial = 2 * g - nontrivial;
    return out;
}

std::set<Integer> raynaud_exponents(const Integer& p, int n, int e) {
    if (!is_prime(p)) throw PreconditionError(to_string(p) + " is not prime");
    if (n < 1 || e < 1) throw PreconditionError("raynaud_exponents needs n, e >= 1");
    if (pow(Integer(e + 1), static_cast<unsigned long>(n)) > (1 << 22)) throw PreconditionError("too many exponents");
    std::set<Integer> out{0};
    Integer place = 1;
    for (int i = 0; i < n; ++i, place *= p) {
        std::set<Integer> next;
        for (const auto& base : out) {
            for (int a = 0; a <= e; ++a) next.insert(base + a * place);
        }
        out = std::move(next);
    }
    return out;
}

SemistabilityResult semistable_from_reduction(const ZPoly& f, const Integer& p, int g) {
    if (p == 2 || !is_prime(p)) throw PreconditionError("semistability criterion needs an odd prime");
    if (!f.is_monic() || f.degree() != 2 * g + 2) throw PreconditionError("expected a monic polynomial of degree 2g+2");
    SemistabilityResult out;
    const auto profile = multiplicity_profile(f, p);
    out.double_roots = static_cast<int>(std::count(profile.begin(), profile.end(), 2));
    if (profile.back() > 2) return out;
    out.status = ReductionStatus::Semistable;
    out.toric_dim = std::min(out.double_roots, g);
    return out;
}

bool transvection_at(const ZPoly& f, const Integer& p) { return recognize_type(f, p, 1, {Integer(2)}).has_value(); }

AdmissibilityFlags admissibility_flags(const Integer& p, int g, const AdmissibilityContext& ctx) {
    if (!is_prime(p)) throw PreconditionError(to_string(p) + " is not prime");
    AdmissibilityFlags out;
    const Integer n = 2 * g + 2;
    // semistable and p > max(g, 2e+1) with e = 1
    auto p_adm_semistable = [&] {
        bool ok = p > std::max(g, 3);
        out.notes.push_back(std::string("semistable with p > max(g,3): ") + (ok ? "yes" : "no"));
        return ok;
    };
    switch (ctx.kind) {
    case AdmissibilityCase::Semistable:
        out.admissible = true;
        out.notes.push_back("semistable reduction: admissible");
        out.p_admissible = p_adm_semistable();
        break;
    case AdmissibilityCase::TotallyToric: {
        out.admissible = true;
        out.notes.push_back("semistable reduction: admissible");
        // ramification of Q_p(zeta_p) is p-1, which equals 2 only for p = 3
        bool toric = p != 2 && p != 3;
        out.notes.push_back(std::string("totally toric with e(Q_p(zeta_p)/Q_p) != 2: ") + (toric ? "yes" : "no"));
        bool semi = p_adm_semistable();
        out.p_admissible = toric || semi;
        break;
    }
    case AdmissibilityCase::TypeOddT: {
        bool ok = ctx.t % 2 == 1 && ctx.qs.size() == 2 && ctx.qs[0] + ctx.qs[1] == n;
        for (const auto& q : ctx.qs) ok = ok && q != 2 && q != p && is_prime(q);
        out.admissible = ok;
        out.notes.push_back(std::string("type t-{q1,q2}, t odd, odd q_i != p, q1+q2 = 2g+2: ") + (ok ? "yes" : "no"));
        break;
    }
    case AdmissibilityCase::TypeTwoQ: {
        bool ok = ctx.t == 2 && ctx.qs.size() == 1 && is_prime(ctx.qs[0]) && ctx.qs[0] != 2 && ctx.qs[0] > g + 1 &&
                  ctx.qs[0] < n;
        out.admissible = ok;
        out.notes.push_back(std::string("type 2-{q}, odd q with g+1 < q < 2g+2: ") + (ok ? "yes" : "no"));
        break;
    }
    }
    return out;
}

} // namespace maxgal
