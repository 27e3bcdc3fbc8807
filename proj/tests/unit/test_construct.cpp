#include <doctest.h>

#include <algorithm>

#include "golden.hpp"
#include "maxgal/arith/fp_poly.hpp"
#include "maxgal/arith/resultant.hpp"
#include "maxgal/construct.hpp"
#include "maxgal/error.hpp"
#include "oracles.hpp"

using namespace maxgal;

namespace {

bool primitive_by_brute_force(const Integer& p, std::uint64_t q) {
    const std::uint64_t a = to_u64(mod(p, from_u64(q)));
    return a != 0 && oracle::order_mod(a, q) == q - 1;
}

void check_plan_by_brute_force(const PrimePlan& plan) {
    const auto& t = plan.tuple;
    for (std::uint64_t q : {t.q1, t.q2, t.q3}) CHECK(primitive_by_brute_force(plan.p2, q));
    CHECK(primitive_by_brute_force(plan.p3, t.q3));
    for (std::uint64_t q : {t.q3, t.q4, t.q5}) CHECK(primitive_by_brute_force(plan.p2p, q));
    CHECK(primitive_by_brute_force(plan.p3p, t.q5));
    CHECK(mod(plan.p2, 3) == 1);
    CHECK(mod(plan.p3, 3) == 1);
    std::vector<Integer> all{plan.p_t, plan.p_t2, plan.p2, plan.p2p, plan.p3, plan.p3p, plan.p_irr, plan.p_lin};
    for (const auto& p : all) {
        CHECK(oracle::is_prime_trial(to_u64(p)));
        CHECK(p != 2);
        CHECK((p > plan.g || p % 2 == 0));
    }
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

Integer moduli_product(const std::vector<LocalSpec>& specs) {
    Integer n = 1;
    for (const auto& s : specs) n *= s.modulus();
    return n;
}

} // namespace

TEST_SUITE("construct") {

TEST_CASE("fixture plan") {
    const auto plan = fixture_plan();
    CHECK(plan_violations(plan).empty());
    check_plan_by_brute_force(plan);
    CHECK(exceptional_primes(plan) == std::set<Integer>{17, 19, 37, 41});
}

TEST_CASE("scanned plans") {
    for (int g : {6, 8, 10, 11, 20}) {
        const auto tuple = two_g_eps_tuples(g).front();
        const auto plan = plan_primes(g, tuple, 0);
        CHECK(plan_violations(plan).empty());
        check_plan_by_brute_force(plan);
        // the scan keeps the small primes away from the q_i as well
        for (const auto& p : {plan.p_t, plan.p_t2, plan.p_irr, plan.p_lin}) {
            for (std::uint64_t q : {tuple.q1, tuple.q2, tuple.q3, tuple.q4, tuple.q5}) CHECK(p != from_u64(q));
        }
    }
    const auto g6 = plan_primes(6, GoldbachTuple{6, 7, 7, 13, 3, 11}, 0);
    CHECK(plan_primes(6, GoldbachTuple{6, 7, 7, 13, 3, 11}, 0) == g6);
    CHECK(plan_primes(6, GoldbachTuple{6, 7, 7, 13, 3, 11}, 1000).p2 > 1000);
    CHECK_THROWS_AS(plan_primes(6, GoldbachTuple{6, 7, 7, 11, 3, 11}, 0), PreconditionError);
    CHECK_THROWS_AS(plan_primes(7, GoldbachTuple{6, 7, 7, 13, 3, 11}, 0), PreconditionError);

    PrimePlan broken = fixture_plan();
    broken.p2 = 23;
    CHECK_FALSE(plan_violations(broken).empty());
    broken = fixture_plan();
    broken.p_irr = 5;
    CHECK_THROWS_AS(validate_plan(broken), PreconditionError);
}

TEST_CASE("local spec menu") {
    const auto specs = local_spec_list(fixture_plan());
    REQUIRE(specs.size() == 11);
    CHECK(specs[0] == LocalSpec::type(Integer(7), 1, {Integer(2)}));
    CHECK(specs[2] == LocalSpec::double_roots(Integer(3), 6));
    CHECK(specs[3] == LocalSpec::double_roots(Integer(5), 6));
    CHECK(specs[5] == LocalSpec::type(Integer(41), 1, {Integer(3), Integer(11)}));
    CHECK(specs[7] == LocalSpec::type(Integer(17), 2, {Integer(11)}));
    CHECK(specs[10] == LocalSpec::good_reduction_2(6));
    CHECK(moduli_product(specs) == golden::N());
    CHECK(plan_modulus(fixture_plan()) == golden::N());

    auto count_double = [](const std::vector<LocalSpec>& s) {
        return std::count_if(s.begin(), s.end(), [](const LocalSpec& x) { return x.kind == LocalKind::DoubleRoots; });
    };
    CHECK(count_double(local_spec_list(plan_primes(8, two_g_eps_tuples(8).front(), 0))) == 3);
    CHECK(count_double(local_spec_list(plan_primes(12, two_g_eps_tuples(12).front(), 0))) == 4);
}

TEST_CASE("assembly reproduces the genus-6 polynomial") {
    const auto witnesses = fixture_witnesses();
    for (const auto& w : witnesses) CHECK(realizes(w.witness.lift(), w.spec, 6));
    const auto [f0, N] = assemble(witnesses, 6);
    CHECK(N == golden::N());
    CHECK(f0 == golden::f0());

    auto reversed = witnesses;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(assemble(reversed, 6).f0 == f0);

    const auto single = assemble({{LocalSpec::good_reduction_2(6), witness_poly(LocalSpec::good_reduction_2(6), 6, 0)}}, 6);
    CHECK(single.N == 16384);
    CHECK(single.f0 == ZPoly::monomial(1, 14) + ZPoly::monomial(2, 13) + ZPoly::constant(4096));

    auto bad = witnesses;
    bad[0].witness = ResiduePoly(Integer(49), {1, 1});
    CHECK_THROWS_AS(assemble(bad, 6), PreconditionError);
    auto shared = witnesses;
    shared.push_back(witnesses[0]);
    CHECK_THROWS_AS(assemble(shared, 6), PreconditionError);
}

TEST_CASE("repair leaves the genus-6 polynomial alone") {
    const auto rec = fix_multiplicities(golden::f0(), golden::N(), 6, exceptional_primes(fixture_plan()), 20000, 20000);
    CHECK(rec.f == golden::f0());
    CHECK(rec.z == 0);
    CHECK(rec.linear_nudge == 0);
    CHECK(rec.repaired_primes.empty());
    CHECK(rec.small_prime_fixes.empty());
    CHECK(rec.n_tilde == golden::N());  // every prime below 12 already divides N
}

TEST_CASE("planted triple root at 101") {
    const ZPoly f0 = golden::f0();
    const Integer N = golden::N();
    const Integer p = 101;
    // target mod 101: (x-5)^3 times a separable product of distinct linear factors
    ZPoly target = ZPoly::linear(5).pow(3);
    for (long j = 10; j <= 20; ++j) target = target * ZPoly::linear(j);
    std::vector<Integer> c;
    const Integer ninv = invmod(N, p);
    for (int i = 0; i < 14; ++i) c.push_back(mod((target.coeff(i) - f0.coeff(i)) * ninv, p));
    const ZPoly f = f0 + N * ZPoly(c);
    REQUIRE(max_multiplicity(f, p) == 3);

    const auto rec = fix_multiplicities(f, N, 6, exceptional_primes(fixture_plan()), 2000, 50000);
    CHECK(std::find(rec.repaired_primes.begin(), rec.repaired_primes.end(), p) != rec.repaired_primes.end());
    CHECK(max_multiplicity(rec.f, p) <= 2);
    CHECK(ResiduePoly::from(rec.f - f0, N).is_zero());
    CHECK(rec.z != 0);
    for (const auto& q : rec.checked_primes) CHECK(max_multiplicity(rec.f, q) <= 2);
    // every other scanned prime keeps its multiplicity bound
    for (std::uint64_t q : oracle::primes_below(2000)) {
        if (exceptional_primes(fixture_plan()).count(from_u64(q)) || mod(N, from_u64(q)) == 0) continue;
        CHECK(max_multiplicity(rec.f, from_u64(q)) <= 2);
    }
}

TEST_CASE("linear nudge separates f' and f''") {
    const Integer N = 2310;
    const ZPoly f = ZPoly::monomial(1, 14);
    CHECK(derivative_resultant(f) == 0);
    const auto rec = fix_multiplicities(f, N, 6, {}, 5000, 20000);
    CHECK(rec.linear_nudge == 1);
    CHECK(derivative_resultant(rec.f) != 0);
    CHECK(ResiduePoly::from(rec.f - f, N).is_zero());
    for (std::uint64_t q : oracle::primes_below(5000)) {
        if (q > 11) CHECK(max_multiplicity(rec.f, from_u64(q)) <= 2);
    }
}

TEST_CASE("small primes outside N are fixed first") {
    // N misses 3 and 5, where x^14 + N x has a root of high multiplicity
    const Integer N = 2 * 7 * 11;
    const auto rec = fix_multiplicities(ZPoly::monomial(1, 14), N, 6, {}, 2000, 20000);
    CHECK(rec.small_prime_fixes == std::vector<Integer>{3, 5});
    CHECK(rec.n_tilde == 2310);
    CHECK(max_multiplicity(rec.f, Integer(3)) <= 2);
    CHECK(max_multiplicity(rec.f, Integer(5)) <= 2);
    CHECK(ResiduePoly::from(rec.f - ZPoly::monomial(1, 14), N).is_zero());
}

TEST_CASE("certificates") {
    CHECK_THROWS_AS(build_certificate(7), ExceptionalGenusError);
    try {
        build_certificate(13);
    } catch (const ExceptionalGenusError& e) {
        CHECK(e.genus() == 13);
    }
    BuildOptions quick;
    quick.scan_bound = 10000;
    quick.rho_budget = 20000;
    quick.fixture = true;
    const auto cert = build_certificate(6, quick);
    CHECK(cert.f0 == golden::f0());
    CHECK(cert.N == golden::N());
    CHECK(cert.repair.f == golden::f0());
    CHECK(certificate_violations(cert).empty());

    auto tampered = cert;
    tampered.f0 = tampered.f0 + ZPoly::constant(1);
    CHECK_FALSE(certificate_violations(tampered).empty());
    tampered = cert;
    tampered.N += 1;
    CHECK_FALSE(certificate_violations(tampered).empty());

    quick.fixture = false;
    const auto g8 = build_certificate(8, quick);
    CHECK(certificate_violations(g8).empty());
    CHECK(g8.plan.tuple == GoldbachTuple{8, 7, 11, 17, 5, 13});
    const auto again = build_certificate(8, quick);
    CHECK(again.f0 == g8.f0);
    CHECK(again.repair.f == g8.repair.f);
    CHECK_THROWS_AS(build_certificate(8, BuildOptions{true}), PreconditionError);
}

}
