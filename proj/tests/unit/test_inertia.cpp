#include <doctest.h>

#include "golden.hpp"
#include "maxgal/error.hpp"
#include "maxgal/inertia.hpp"

using namespace maxgal;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

Rational frac(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

} // namespace

TEST_SUITE("inertia") {

TEST_CASE("type pictures") {
    auto pic = clusters_from_type(1, ints({7, 7}), 14);
    REQUIRE(pic.clusters.size() == 3);
    CHECK(pic.clusters[0].roots.size() == 14);
    CHECK(pic.clusters[1].depth == frac(1, 7));
    CHECK(pic.clusters[2].roots.size() == 7);
    CHECK(picture_violation(pic).empty());

    auto p13 = clusters_from_type(2, ints({13}), 14);
    REQUIRE(p13.clusters.size() == 2);
    CHECK(p13.clusters[1].depth == frac(2, 13));
    CHECK(p13.singleton_children(0) == 1);

    auto sep = clusters_from_type(1, {}, 14);
    CHECK(sep.clusters.size() == 1);
    CHECK(sep.singleton_children(0) == 14);

    CHECK_THROWS_AS(clusters_from_type(2, ints({2}), 14), PreconditionError);
    CHECK_THROWS_AS(clusters_from_type(1, ints({9}), 14), PreconditionError);
    CHECK_THROWS_AS(clusters_from_type(3, ints({3}), 14), PreconditionError);
    CHECK_THROWS_AS(clusters_from_type(1, ints({7, 11}), 14), PreconditionError);
}

TEST_CASE("cluster invariants") {
    auto pic = clusters_from_type(1, ints({7, 7}), 14);
    auto top = cluster_invariants(pic, 0);
    CHECK(top.mu == 0);
    CHECK(top.lambda == 0);
    CHECK(top.epsilon == EpsilonKind::Trivial);
    CHECK(top.gamma_order == 1);
    CHECK(top.v_dim == 0);

    auto block = cluster_invariants(pic, 1);
    CHECK(block.d == frac(1, 7));
    CHECK(block.lambda == frac(1, 2));
    CHECK(block.gamma_order == 2);
    CHECK(block.epsilon == EpsilonKind::Zero);
    CHECK(block.v_dim == 6);
    CHECK(cluster_invariants(pic, 1, Integer(2)).gamma_order == 1);

    auto even_t = cluster_invariants(clusters_from_type(2, ints({13}), 14), 1);
    CHECK(even_t.gamma_order == 1);
    CHECK(even_t.v_dim == 12);

    auto pairs = clusters_from_double_roots(3, 14);
    auto pair = cluster_invariants(pairs, 2);
    CHECK(pair.epsilon == EpsilonKind::Trivial);
    CHECK(pair.v_dim == 0);
    CHECK(pair.gamma_order == 2);  // lambda = d = 1/2
    CHECK(cluster_invariants(clusters_from_double_roots(3, 14, Rational(1)), 2).gamma_order == 1);

    // mu is odd once the top depth is positive and a pair sits inside
    ClusterPicture shifted = pairs;
    shifted.clusters[0].depth = 1;
    for (std::size_t i = 1; i < shifted.clusters.size(); ++i) shifted.clusters[i].depth = 2;
    auto odd = cluster_invariants(shifted, 1);
    CHECK(odd.mu == 12);
    CHECK(odd.epsilon == EpsilonKind::Trivial);
    ClusterPicture odd_mu = clusters_from_double_roots(1, 3 + 2);
    odd_mu.clusters[0].depth = 1;
    odd_mu.clusters[1].depth = 2;
    CHECK(cluster_invariants(odd_mu, 1).mu == 3);
    CHECK(cluster_invariants(odd_mu, 1).epsilon == EpsilonKind::OrderTwo);
}

TEST_CASE("unsupported pictures are rejected") {
    ClusterPicture deep = clusters_from_double_roots(2, 6);
    deep.clusters.push_back({{0, 1, 2, 3}, Rational(1, 4), 0});
    deep.clusters[1].parent = 3;
    deep.clusters[2].parent = 3;
    CHECK_THROWS_WITH_AS(cluster_invariants(deep, 0), "outside supported cluster family", Error);
    ClusterPicture broken = clusters_from_double_roots(1, 4);
    broken.clusters[1].depth = -1;
    CHECK_FALSE(picture_violation(broken).empty());
    CHECK_THROWS_WITH_AS(etale_decomposition(broken, 1), "outside supported cluster family", Error);
}

TEST_CASE("etale decomposition") {
    const int g = 6;
    for (int d = 0; d <= g; ++d) {
        auto et = etale_decomposition(clusters_from_double_roots(d, 2 * g + 2), g);
        CHECK(et.h1_ab == 2 * g - 2 * d);
        CHECK(et.h1_t == d);
    }
    auto all = etale_decomposition(clusters_from_double_roots(g + 1, 2 * g + 2), g);
    CHECK(all.h1_t == g);
    CHECK(all.h1_ab == 0);
    auto type = etale_decomposition(clusters_from_type(1, ints({7, 7}), 14), g);
    CHECK(type.h1_t == 0);
    CHECK(type.h1_ab == 12);
    // type 1-{2} is the one-pair picture
    auto transv = etale_decomposition(clusters_from_type(1, ints({2}), 14), g);
    CHECK(transv.h1_t == 1);
    CHECK_THROWS_AS(etale_decomposition(clusters_from_double_roots(1, 14), 5), PreconditionError);
}

TEST_CASE("tame eigenvalues") {
    auto e = tame_eigenvalues(1, ints({7, 7}), 6);
    CHECK(e.entries.size() == 12);
    CHECK(e.trivial == 0);
    CHECK(e.order_divisor == 98);
    for (int j = 1; j <= 6; ++j) {
        RootOfUnity z{-1, 7, j};
        CHECK(std::count(e.entries.begin(), e.entries.end(), z) == 2);
    }
    auto e13 = tame_eigenvalues(2, ints({13}), 6);
    CHECK(e13.entries.size() == 12);
    CHECK(e13.entries.front() == RootOfUnity{1, 13, 1});
    CHECK(e13.entries.front().to_string() == "zeta_13^1");
    auto none = tame_eigenvalues(1, {}, 6);
    CHECK(none.trivial == 12);
    CHECK(none.size() == 12);
    CHECK_THROWS_AS(tame_eigenvalues(1, ints({13, 3}), 6), PreconditionError);
    CHECK_THROWS_AS(tame_eigenvalues(1, ints({2}), 6), PreconditionError);
}

TEST_CASE("raynaud exponents") {
    CHECK(raynaud_exponents(Integer(3), 1, 1) == std::set<Integer>{0, 1});
    CHECK(raynaud_exponents(Integer(3), 2, 1) == std::set<Integer>{0, 1, 3, 4});
    CHECK(raynaud_exponents(Integer(5), 1, 2) == std::set<Integer>{0, 1, 2});
    for (long p : {2L, 3L, 5L, 7L}) {
        for (int n = 1; n <= 4; ++n) {
            for (int e = 1; e <= 3; ++e) {
                auto s = raynaud_exponents(Integer(p), n, e);
                CHECK(s.count(0) == 1);
                CHECK(Integer(static_cast<long>(s.size())) <= pow(Integer(e + 1), static_cast<unsigned long>(n)));
                // e < p makes the digits unique
                if (e < p) CHECK(Integer(static_cast<long>(s.size())) == pow(Integer(e + 1), static_cast<unsigned long>(n)));
            }
        }
    }
    CHECK_THROWS_AS(raynaud_exponents(Integer(4), 1, 1), PreconditionError);
}

TEST_CASE("semistability from the reduction") {
    const ZPoly f0 = golden::f0();
    auto at3 = semistable_from_reduction(f0, Integer(3), 6);
    CHECK(at3.status == ReductionStatus::Semistable);
    CHECK(at3.toric_dim == 6);
    auto at19 = semistable_from_reduction(f0, Integer(19), 6);
    CHECK(at19.status == ReductionStatus::Unknown);
    CHECK_FALSE(at19.toric_dim.has_value());
    auto at23 = semistable_from_reduction(f0, Integer(23), 6);
    CHECK(at23.status == ReductionStatus::Semistable);
    CHECK(at23.toric_dim == 0);
    CHECK(semistable_from_reduction(f0, Integer(7), 6).toric_dim == 1);
    CHECK_THROWS_AS(semistable_from_reduction(f0, Integer(2), 6), PreconditionError);
}

TEST_CASE("transvections") {
    const ZPoly f0 = golden::f0();
    CHECK(transvection_at(f0, Integer(7)));
    CHECK(transvection_at(f0, Integer(11)));
    CHECK_FALSE(transvection_at(ZPoly::monomial(1, 14) - ZPoly::constant(1), Integer(7)));
    CHECK_FALSE(transvection_at(f0, Integer(23)));
}

TEST_CASE("admissibility") {
    auto q3 = admissibility_flags(Integer(37), 6, {AdmissibilityCase::TypeTwoQ, 2, ints({13})});
    CHECK(q3.admissible);
    auto q12 = admissibility_flags(Integer(19), 6, {AdmissibilityCase::TypeOddT, 1, ints({7, 7})});
    CHECK(q12.admissible);
    auto semi = admissibility_flags(Integer(5), 6, {AdmissibilityCase::Semistable, 0, {}});
    CHECK(semi.admissible);
    CHECK_FALSE(semi.p_admissible);
    CHECK(admissibility_flags(Integer(7), 6, {AdmissibilityCase::Semistable, 0, {}}).p_admissible);
    CHECK(admissibility_flags(Integer(5), 6, {AdmissibilityCase::TotallyToric, 0, {}}).p_admissible);
    CHECK_FALSE(admissibility_flags(Integer(3), 6, {AdmissibilityCase::TotallyToric, 0, {}}).p_admissible);
    CHECK_FALSE(admissibility_flags(Integer(37), 6, {AdmissibilityCase::TypeTwoQ, 2, ints({7})}).admissible);
    CHECK_FALSE(admissibility_flags(Integer(19), 6, {AdmissibilityCase::TypeOddT, 2, ints({7, 7})}).admissible);
    CHECK_FALSE(admissibility_flags(Integer(7), 6, {AdmissibilityCase::TypeOddT, 1, ints({7, 7})}).admissible);
}

}
