#include "maxgal/arith/factor.hpp"

#include <algorithm>
#include <random>

#include "maxgal/arith/primes.hpp"
#include "maxgal/error.hpp"
#include "poly_kernel.hpp"

namespace maxgal {

FpPoly Factorization::product() const {
    FpPoly out = FpPoly::constant(prime, unit);
    for (const auto& [g, e] : factors) out = out * g.pow(static_cast<unsigned>(e));
    return out;
}

std::vector<int> Factorization::degree_pattern() const {
    std::vector<int> out;
    for (const auto& [g, e] : factors) {
        for (int i = 0; i < e; ++i) out.push_back(g.degree());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool poly_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (int i = a.degree(); i >= 0; --i) {
        const auto k = static_cast<std::size_t>(i);
        if (ca[k] != cb[k]) return ca[k] < cb[k];
    }
    return false;
}

std::uint64_t seed_word(const Integer& seed) {
    Integer s = mod(seed, Integer(1) << 64);
    return to_u64(s);
}

} // namespace

Factorization fp_factor(const FpPoly& f, const Integer& seed) {
    const Integer& p = f.prime();
    if (!is_prime(p)) throw PreconditionError("fp_factor: " + to_string(p) + " is not prime");
    if (f.is_zero()) throw PreconditionError("fp_factor of the zero polynomial");
    Factorization out;
    out.prime = p;
    out.unit = f.leading();
    std::mt19937_64 rng(seed_word(seed));
    detail::with_field(p, [&](const auto& field) {
        auto poly = detail::monic(field, detail::load(field, f.coeffs()));
        for (auto& [part, mult] : detail::squarefree(field, poly)) {
            for (auto& [block, d] : detail::distinct_degree(field, part)) {
                using F = std::decay_t<decltype(field)>;
                std::vector<detail::Vec<F>> pieces;
                detail::equal_degree(field, block, d, rng, pieces);
                for (auto& piece : pieces) {
                    out.factors.emplace_back(FpPoly(p, detail::store(field, piece)), mult);
                }
            }
        }
        return 0;
    });
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f) {
    if (f.is_zero()) throw PreconditionError("square-free decomposition of the zero polynomial");
    const Integer& p = f.prime();
    return detail::with_field(p, [&](const auto& field) {
        std::vector<std::pair<FpPoly, int>> out;
        auto poly = detail::monic(field, detail::load(field, f.coeffs()));
        for (auto& [part, mult] : detail::squarefree(field, poly)) {
            out.emplace_back(FpPoly(p, detail::store(field, part)), mult);
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
        return out;
    });
}

int max_root_multiplicity(const ZPoly& f, std::uint64_t p) {
    if (p < 2 || p >= detail::WordField::kLimit) throw PreconditionError("max_root_multiplicity needs a word-size prime");
    detail::WordField field{p};
    detail::Vec<detail::WordField> poly(f.coeffs().size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        Integer r = f.coeffs()[i];
        poly[i] = mpz_fdiv_ui(r.get_mpz_t(), p);
    }
    detail::trim(field, poly);
    if (poly.empty()) throw PreconditionError("polynomial vanishes modulo " + std::to_string(p));
    poly = detail::monic(field, poly);
    int best = 0;
    for (const auto& part : detail::squarefree(field, poly)) best = std::max(best, part.second);
    return best;
}

} // namespace maxgal
