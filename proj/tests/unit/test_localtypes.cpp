#include <doctest.h>

#include <random>

#include "golden.hpp"
#include "maxgal/arith/fp_poly.hpp"
#include "maxgal/arith/primes.hpp"
#include "maxgal/error.hpp"
#include "maxgal/localtypes.hpp"
#include "oracles.hpp"

using namespace maxgal;

namespace {

ZPoly x_pow(int n) { return ZPoly::monomial(1, n); }

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Vertices of the lower convex hull of {(i, v(a_i))}, skipping zero coefficients.
std::vector<std::pair<long, long>> newton_polygon(const ZPoly& f, const Integer& p) {
    std::vector<std::pair<long, long>> pts, hull;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) != 0) pts.emplace_back(i, valuation(f.coeff(i), p));
    }
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto [x1, y1] = hull[hull.size() - 2];
            auto [x2, y2] = hull.back();
            // drop the middle point if it lies on or above the chord
            if ((y2 - y1) * (pt.first - x1) >= (pt.second - y1) * (x2 - x1)) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    return hull;
}

} // namespace

TEST_SUITE("localtypes") {

TEST_CASE("t-Eisenstein") {
    CHECK(is_t_eisenstein(x_pow(7) - ZPoly::constant(19), Integer(19), 1));
    CHECK(is_t_eisenstein(x_pow(13) - ZPoly::constant(37 * 37), Integer(37), 2));
    CHECK_FALSE(is_t_eisenstein(x_pow(2) - ZPoly::constant(49), Integer(7), 1));
    CHECK_FALSE(is_t_eisenstein(x_pow(3) + ZPoly{0, 1} - ZPoly::constant(7), Integer(7), 1));
    CHECK(is_t_eisenstein(x_pow(3) + ZPoly{0, 49} - ZPoly::constant(49), Integer(7), 2));

    ResiduePoly r(Integer(37 * 37 * 37), {-37 * 37, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    CHECK(is_t_eisenstein(r, Integer(37), 2));
    CHECK_THROWS_WITH_AS(is_t_eisenstein(r, Integer(37), 3), "insufficient modulus", Error);
    CHECK_THROWS_AS(is_t_eisenstein(ZPoly{7, 2}, Integer(7), 1), PreconditionError);
}

TEST_CASE("Eisenstein implies a single Newton slope") {
    std::mt19937_64 rng(11);
    int hits = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const long p = std::vector<long>{3, 5, 7}[rng() % 3];
        const int t = 1 + static_cast<int>(rng() % 3);
        const int deg = 2 + static_cast<int>(rng() % 5);
        const Integer pt = pow(Integer(p), static_cast<unsigned long>(t));
        std::vector<Integer> c;
        for (int i = 0; i < deg; ++i) {
            long r = static_cast<long>(rng() % 7) - 3;
            c.push_back(rng() % 2 ? pt * r : Integer(r * p));
        }
        c.emplace_back(1);
        ZPoly f(c);
        if (!is_t_eisenstein(f, Integer(p), t)) continue;
        ++hits;
        auto hull = newton_polygon(f, Integer(p));
        REQUIRE(hull.size() == 2);
        CHECK(hull.front() == std::pair<long, long>{0, t});
        CHECK(hull.back() == std::pair<long, long>{deg, 0});
    }
    CHECK(hits > 100);
}

TEST_CASE("recognize_type on the genus-6 polynomial") {
    const ZPoly f0 = golden::f0();
    auto w19 = recognize_type(f0, Integer(19), 1, ints({7, 7}));
    REQUIRE(w19);
    CHECK(w19->shifts == ints({0, 1}));
    CHECK(w19->cofactor.degree() == 0);
    for (const auto& b : w19->blocks) CHECK(is_t_eisenstein(b, Integer(19), 1));

    auto w17 = recognize_type(f0, Integer(17), 2, ints({11}));
    REQUIRE(w17);
    CHECK(w17->shifts == ints({0}));
    CHECK(w17->cofactor.reduce(Integer(17)) == ResiduePoly(Integer(17), {14, 1, 0, 1}));

    auto w41 = recognize_type(f0, Integer(41), 1, ints({3, 11}));
    REQUIRE(w41);
    CHECK(w41->shifts == ints({1, 0}));
    CHECK(recognize_type(f0, Integer(41), 1, ints({11, 3}))->shifts == ints({0, 1}));

    CHECK(recognize_type(f0, Integer(37), 2, ints({13})));
    CHECK(recognize_type(f0, Integer(7), 1, ints({2})));
    CHECK(recognize_type(f0, Integer(11), 1, ints({2})));
    CHECK_FALSE(recognize_type(f0, Integer(19), 1, ints({7})));
    CHECK_FALSE(recognize_type(f0, Integer(23), 1, ints({2})));
    CHECK_FALSE(recognize_type(f0, Integer(37), 1, ints({13})));  // a_0 has valuation 2 after centering
    CHECK_FALSE(recognize_type(f0, Integer(37), 3, ints({13})));
}

TEST_CASE("recognize_type small cases") {
    CHECK_FALSE(recognize_type(ZPoly{-1, 0, 1}, Integer(5), 1, ints({2})));
    // (x-3)^2 - 5 has type 1-{2}; (x-3)^2 - 25 does not
    CHECK(recognize_type(ZPoly::linear(3).pow(2) - ZPoly::constant(5), Integer(5), 1, ints({2})));
    CHECK_FALSE(recognize_type(ZPoly::linear(3).pow(2) - ZPoly::constant(25), Integer(5), 1, ints({2})));
    // double root at a non-rational point: (x^2 - 2)^2 + 3 mod 3 has no rational roots
    CHECK_FALSE(recognize_type((ZPoly{-2, 0, 1}).pow(2) + ZPoly::constant(3), Integer(3), 1, ints({2, 2})));
    // p dividing a block degree
    auto w = recognize_type(ZPoly::linear(1).pow(3) - ZPoly::constant(3), Integer(3), 1, ints({3}));
    REQUIRE(w);
    CHECK(w->shifts == ints({1}));
    CHECK_THROWS_AS(recognize_type(ZPoly{-1, 0, 1}, Integer(2), 1, ints({2})), PreconditionError);
    CHECK_THROWS_AS(recognize_type(ZPoly{-1, 0, 1}, Integer(9), 1, ints({2})), PreconditionError);
}

TEST_CASE("recognition depends only on f mod p^(t+1)") {
    const ZPoly f0 = golden::f0();
    std::mt19937_64 rng(5);
    struct Case { long p; int t; std::vector<Integer> qs; };
    const std::vector<Case> cases{{19, 1, ints({7, 7})}, {37, 2, ints({13})}, {17, 2, ints({11})}, {7, 1, ints({2})}};
    for (const auto& c : cases) {
        const Integer pm = pow(Integer(c.p), static_cast<unsigned long>(c.t) + 1);
        for (int k = 0; k < 10; ++k) {
            std::vector<Integer> noise;
            for (int i = 0; i < 14; ++i) noise.emplace_back(static_cast<long>(rng() % 1000) - 500);
            ZPoly g = f0 + pm * ZPoly(noise);
            CHECK(recognize_type(g, Integer(c.p), c.t, c.qs).has_value());
        }
    }
}

TEST_CASE("valuation of the block constant must be exactly t") {
    for (long p : {5L, 7L, 11L}) {
        for (int t = 1; t <= 3; ++t) {
            const Integer pt = pow(Integer(p), static_cast<unsigned long>(t));
            const ZPoly h = ZPoly::linear(2) * ZPoly::linear(3);
            ZPoly good = (x_pow(3) - ZPoly::constant(pt)) * (ZPoly::linear(1).pow(2) - ZPoly::constant(pt)) * h;
            ZPoly bad = (x_pow(3) - ZPoly::constant(pt * p)) * (ZPoly::linear(1).pow(2) - ZPoly::constant(pt)) * h;
            CHECK(recognize_type(good, Integer(p), t, ints({3, 2})).has_value());
            CHECK_FALSE(recognize_type(bad, Integer(p), t, ints({3, 2})).has_value());
        }
    }
}

TEST_CASE("witness_poly") {
    WitnessOptions opt;
    opt.cofactor = ZPoly{1, 1};
    auto w = witness_poly(LocalSpec::type(Integer(37), 2, ints({13})), 6, 0, opt);
    CHECK(w == ResiduePoly::from((x_pow(13) - ZPoly::constant(37 * 37)) * ZPoly{1, 1}, Integer(37 * 37 * 37)));

    auto good = witness_poly(LocalSpec::good_reduction_2(6), 6, 0);
    CHECK(good == ResiduePoly::from(x_pow(14) + ZPoly::monomial(2, 13) + ZPoly::constant(4096), Integer(16384)));

    auto dr = witness_poly(LocalSpec::double_roots(Integer(3), 6), 6, 0);
    CHECK(dr.modulus() == 9);
    auto profile = multiplicity_profile(dr.lift(), Integer(3));
    CHECK(profile == std::vector<int>{1, 1, 2, 2, 2, 2, 2, 2});

    auto irr = witness_poly(LocalSpec::irreducible(Integer(23)), 6, 4);
    CHECK(FpPoly::from(irr.lift(), Integer(23)).is_irreducible());
    auto lin = witness_poly(LocalSpec::linear_times_irreducible(Integer(29)), 6, 4);
    CHECK(realizes(lin.lift(), LocalSpec::linear_times_irreducible(Integer(29)), 6));

    opt.cofactor = ZPoly{0, 1};  // x vanishes at the block root 0
    CHECK_THROWS_AS(witness_poly(LocalSpec::type(Integer(37), 2, ints({13})), 6, 0, opt), PreconditionError);
    // a linear cofactor mod 3 cannot avoid the block roots 0, 1, 2
    WitnessOptions tiny;
    tiny.budget = 50;
    CHECK_THROWS_WITH_AS(witness_poly(LocalSpec::type(Integer(3), 1, ints({2, 2, 3})), 3, 0, tiny), "no witness found",
                         Error);
    auto wrong_m = LocalSpec::type(Integer(37), 1, ints({13}));
    wrong_m.m = 3;
    CHECK_THROWS_AS(witness_poly(wrong_m, 6, 0), PreconditionError);
}

TEST_CASE("round trip on random type specs") {
    std::mt19937_64 rng(17);
    const auto primes = oracle::primes_below(60);
    for (int trial = 0; trial < 40; ++trial) {
        const int g = 2 + static_cast<int>(rng() % 5);
        Integer p = from_u64(primes[1 + rng() % (primes.size() - 1)]);
        const int t = 1 + static_cast<int>(rng() % 3);
        std::vector<Integer> qs;
        int room = 2 * g + 2;
        const int k = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < k; ++i) {
            std::vector<long> fits;
            for (long q : {2, 3, 5, 7, 11, 13}) {
                if (q <= room) fits.push_back(q);
            }
            if (fits.empty()) break;
            long q = fits[rng() % fits.size()];
            qs.emplace_back(q);
            room -= static_cast<int>(q);
        }
        auto spec = LocalSpec::type(p, t, qs);
        auto w = witness_poly(spec, g, rng());
        auto rec = recognize_type(w.lift(), p, t, qs);
        REQUIRE(rec);
        CHECK(rec->t == t);
        CHECK(rec->qs == qs);
        CHECK(rec->shifts.size() == qs.size());
        CHECK(realizes(w.lift(), spec, g));
    }
}

TEST_CASE("multiplicity profile") {
    ZPoly f = x_pow(2) * ZPoly::linear(1).pow(3);
    CHECK(multiplicity_profile(f, Integer(5)) == std::vector<int>{2, 3});
    CHECK(max_multiplicity(f, Integer(5)) == 3);
    CHECK(multiplicity_profile(golden::f0(), Integer(3)) == std::vector<int>{1, 1, 2, 2, 2, 2, 2, 2});
    CHECK(multiplicity_profile(golden::f0(), Integer(5)) == std::vector<int>{1, 1, 2, 2, 2, 2, 2, 2});
    CHECK(multiplicity_profile(ZPoly{1, 0, 1}, Integer(7)) == std::vector<int>{1, 1});
    CHECK(max_multiplicity(golden::f0(), Integer(2)) == 14);
    CHECK_THROWS_AS(multiplicity_profile(ZPoly{5, 10}, Integer(5)), PreconditionError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11}[rng() % 5];
        std::vector<Integer> c;
        const int deg = 1 + static_cast<int>(rng() % 9);
        for (int i = 0; i < deg; ++i) c.emplace_back(static_cast<long>(rng() % 50));
        c.emplace_back(1);
        ZPoly g(c);
        auto profile = multiplicity_profile(g, from_u64(p));
        int sum = 0;
        for (int m : profile) sum += m;
        CHECK(sum == deg);
        // rational roots seen by evaluation carry the same multiplicities
        for (auto [root, mult] : oracle::roots_mod(g, p)) {
            (void)root;
            CHECK(std::count(profile.begin(), profile.end(), mult) >= 1);
        }
    }
}

TEST_CASE("good reduction at 2") {
    const int g = 6;
    CHECK(good_reduction_at_2(golden::f0(), g));
    CHECK_FALSE(good_reduction_at_2(x_pow(14), g));
    CHECK(good_reduction_at_2(x_pow(14) + ZPoly::monomial(2, 13) + ZPoly::constant(4096 + 16384), g));
    CHECK_FALSE(good_reduction_at_2(x_pow(14) + ZPoly::monomial(4, 13) + ZPoly::constant(4096), g));
    CHECK_FALSE(good_reduction_at_2(x_pow(14) + ZPoly::monomial(2, 13) + ZPoly::monomial(2, 12) + ZPoly::constant(4096), g));
    CHECK(good_reduction_at_2(x_pow(14) + ZPoly::monomial(2, 13) + ZPoly::monomial(4, 12) + ZPoly::constant(4096), g));
    CHECK_THROWS_AS(good_reduction_at_2(x_pow(12), g), PreconditionError);
}

}
