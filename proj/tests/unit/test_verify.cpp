#include <doctest.h>

#include "golden.hpp"
#include "maxgal/construct.hpp"
#include "maxgal/error.hpp"
#include "maxgal/localtypes.hpp"
#include "maxgal/verify.hpp"

using namespace maxgal;

namespace {

bool all_hold(const VerificationReport& r) {
    for (const auto& f : r.flags) {
        if (!f.holds()) return false;
    }
    return true;
}

std::string failing(const VerificationReport& r) {
    std::string out;
    for (const auto& f : r.flags) {
        if (!f.holds()) out += to_string(f.hypothesis) + ": " + f.evidence + "\n";
    }
    return out;
}

VerificationReport with_status(VerificationReport r, Hypothesis h, FlagStatus s) {
    for (auto& f : r.flags) {
        if (f.hypothesis == h) f.status = s;
    }
    return r;
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("names round-trip") {
    for (auto h : all_hypotheses()) CHECK(parse_hypothesis(to_string(h)) == h);
    CHECK(all_hypotheses().size() == 11);
    for (auto s : {FlagStatus::Pass, FlagStatus::Fail, FlagStatus::Conditional}) CHECK(parse_flag_status(to_string(s)) == s);
    for (auto k : {VerdictKind::MaximalAll, VerdictKind::MaximalExcept, VerdictKind::None}) {
        CHECK(parse_verdict_kind(to_string(k)) == k);
    }
    CHECK_THROWS_AS(parse_hypothesis("adm"), PreconditionError);
}

TEST_CASE("genus-6 polynomial passes everything") {
    const auto r = check_hypotheses(golden::f0(), fixture_plan(), 100000, 100000);
    INFO(failing(r));
    CHECK(all_hold(r));
    CHECK(r.scan.bad_primes.empty());
    CHECK(r.adm);
    CHECK(r.cycle_full);
    CHECK(r.cycle_minus_one);
    CHECK(r.transposition);
    CHECK(r.not_totally_toric.empty());
    CHECK(r.flag(Hypothesis::TT).evidence == "g double roots at 3,5");
    for (auto h : {Hypothesis::TwoGEps, Hypothesis::GEps, Hypothesis::TwoT, Hypothesis::TT, Hypothesis::P2,
                   Hypothesis::P3, Hypothesis::P2Prime, Hypothesis::P3Prime, Hypothesis::Three, Hypothesis::Symmetric}) {
        CHECK(r.flag(h).status == FlagStatus::Pass);
    }
    const auto v = verdict(r, 6);
    CHECK(v.kind == VerdictKind::MaximalAll);
    CHECK(v.symmetric_mod_2);
    CHECK(v.excluded.empty());
    CHECK(v.theorem == "double-goldbach");
    CHECK(v.conditional == (r.flag(Hypothesis::SS).status == FlagStatus::Conditional));
}

TEST_CASE("scan bound only adds evidence") {
    const auto lo = check_hypotheses(golden::f0(), fixture_plan(), 1000, 100000);
    const auto hi = check_hypotheses(golden::f0(), fixture_plan(), 50000, 100000);
    for (auto h : all_hypotheses()) CHECK(lo.flag(h).holds() == hi.flag(h).holds());
    CHECK(lo.scan.bound == 1000);
}

TEST_CASE("perturbing the x coefficient breaks the local shapes") {
    const ZPoly f = golden::f0() + ZPoly::monomial(1, 1);
    CHECK_FALSE(good_reduction_at_2(f, 6));
    const auto r = check_hypotheses(f, fixture_plan(), 10000, 10000);
    CHECK(r.flag(Hypothesis::SS).status == FlagStatus::Fail);
    int broken = 0;
    for (auto h : {Hypothesis::P2, Hypothesis::P3, Hypothesis::P2Prime, Hypothesis::P3Prime, Hypothesis::TwoT}) {
        broken += !r.flag(h).holds();
    }
    CHECK(broken >= 1);
    CHECK(r.flag(Hypothesis::TwoGEps).holds());
    CHECK(verdict(r, 6).kind == VerdictKind::None);
}

TEST_CASE("x^14 - 1 fails the local hypotheses") {
    const ZPoly f = ZPoly::monomial(1, 14) - ZPoly::constant(1);
    const auto r = check_hypotheses(f, fixture_plan(), 1000, 1000);
    for (auto h : {Hypothesis::TwoT, Hypothesis::TT, Hypothesis::P2, Hypothesis::P3, Hypothesis::P2Prime,
                   Hypothesis::P3Prime, Hypothesis::Symmetric, Hypothesis::SS}) {
        CHECK_FALSE(r.flag(h).holds());
    }
    CHECK(r.not_totally_toric == std::vector<Integer>{3, 5});
    const auto v = verdict(r, 6);
    CHECK(v.kind == VerdictKind::None);
    CHECK(v.excluded.empty());
}

TEST_CASE("shifting by a multiple of N keeps the type flags") {
    const ZPoly f = golden::f0() + golden::N() * ZPoly::monomial(1, 1);
    const auto base = check_hypotheses(golden::f0(), fixture_plan(), 2000, 20000);
    const auto r = check_hypotheses(f, fixture_plan(), 2000, 20000);
    for (auto h : {Hypothesis::TwoT, Hypothesis::TT, Hypothesis::P2, Hypothesis::P3, Hypothesis::P2Prime,
                   Hypothesis::P3Prime, Hypothesis::Three, Hypothesis::Symmetric}) {
        CHECK(r.flag(h).status == base.flag(h).status);
    }
    CHECK(good_reduction_at_2(f, 6));
}

TEST_CASE("verdict bookkeeping") {
    const auto r = check_hypotheses(golden::f0(), fixture_plan(), 1000, 20000);
    const auto no3 = verdict(with_status(r, Hypothesis::Three, FlagStatus::Fail), 6);
    CHECK(no3.kind == VerdictKind::MaximalExcept);
    CHECK(no3.excluded == std::set<Integer>{3});
    CHECK(no3.symmetric_mod_2);
    const auto no2 = verdict(with_status(r, Hypothesis::Symmetric, FlagStatus::Fail), 6);
    CHECK(no2.excluded == std::set<Integer>{2});
    CHECK_FALSE(no2.symmetric_mod_2);
    const auto neither = verdict(with_status(with_status(r, Hypothesis::Three, FlagStatus::Fail), Hypothesis::Symmetric,
                                             FlagStatus::Fail), 6);
    CHECK(neither.excluded == std::set<Integer>{2, 3});

    const auto cond = verdict(with_status(r, Hypothesis::SS, FlagStatus::Conditional), 6);
    CHECK(cond.kind == VerdictKind::MaximalAll);
    CHECK(cond.conditional);
    CHECK(cond.text.find("conditional on no triple roots above 1000") != std::string::npos);

    // without the second pair only the single-pair theorem applies
    const auto partial = verdict(with_status(r, Hypothesis::P3Prime, FlagStatus::Fail), 6);
    CHECK(partial.kind == VerdictKind::MaximalExcept);
    CHECK(partial.theorem == "single-goldbach");
    CHECK(partial.excluded == std::set<Integer>{2, 3, 7, 13, 19, 37});

    auto none = r;
    for (auto& f : none.flags) f.status = FlagStatus::Fail;
    none.adm = false;
    CHECK(verdict(none, 6).kind == VerdictKind::None);
}

TEST_CASE("second pair replaced by a separable residue") {
    // swap the type 1-{3,11} witness at 41 for a product of distinct linear factors
    auto witnesses = fixture_witnesses();
    const Integer m = 41 * 41;
    ZPoly separable = ZPoly::constant(1);
    for (long j = 0; j < 14; ++j) separable = separable * ZPoly::linear(j);
    bool swapped = false;
    for (auto& w : witnesses) {
        if (w.spec.p == 41) {
            w.witness = ResiduePoly::from(separable, m);
            swapped = true;
        }
    }
    REQUIRE(swapped);
    const auto [f0, N] = assemble(witnesses, 6);
    const auto rec = fix_multiplicities(f0, N, 6, exceptional_primes(fixture_plan()), 5000, 50000);
    const auto r = check_hypotheses(rec.f, fixture_plan(), 5000, 50000);
    CHECK_FALSE(r.flag(Hypothesis::P2Prime).holds());
    CHECK(r.flag(Hypothesis::P3Prime).holds());
    CHECK(r.flag(Hypothesis::GEps).holds());
    CHECK(r.adm);
    CHECK(r.not_semistable.empty());
    const auto v = verdict(r, 6);
    CHECK(v.kind == VerdictKind::MaximalExcept);
    CHECK(v.theorem == "single-goldbach");
    CHECK(v.excluded == std::set<Integer>{2, 3, 7, 13, 19, 37});
}

TEST_CASE("totally toric means g double roots") {
    CHECK(is_totally_toric(golden::f0(), 3, 6));
    CHECK(is_totally_toric(golden::f0(), 5, 6));
    CHECK_FALSE(is_totally_toric(golden::f0(), 7, 6));
    CHECK_FALSE(is_totally_toric(golden::f0(), 3, 5));
    const ZPoly triple = ZPoly::linear(0).pow(3) * ZPoly::linear(1).pow(2) * ZPoly::linear(2).pow(2) *
                         ZPoly::linear(3).pow(2) * ZPoly::linear(4).pow(2) * ZPoly::linear(5).pow(2) *
                         ZPoly::linear(6);
    CHECK(triple.degree() == 14);
    CHECK_FALSE(is_totally_toric(triple, 101, 5));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(check_hypotheses(ZPoly::monomial(1, 12) - ZPoly::constant(1), fixture_plan(), 100, 100),
                    PreconditionError);
    const ZPoly square = (ZPoly::monomial(1, 7) - ZPoly::constant(3)).pow(2);
    CHECK_THROWS_AS(check_hypotheses(square, fixture_plan(), 100, 100), PreconditionError);
    CHECK_THROWS_AS(check_hypotheses(ZPoly::monomial(2, 14) + ZPoly::constant(1), fixture_plan(), 100, 100),
                    PreconditionError);
}

TEST_CASE("exceptional genera table") {
    CHECK(excluded_primes_exceptional(2) == std::set<Integer>{3, 5});
    CHECK(excluded_primes_exceptional(3) == std::set<Integer>{3, 5, 7});
    CHECK(excluded_primes_exceptional(4) == std::set<Integer>{5, 7});
    CHECK(excluded_primes_exceptional(5) == std::set<Integer>{5, 7, 11});
    CHECK(excluded_primes_exceptional(7) == std::set<Integer>{5, 11, 13});
    CHECK(excluded_primes_exceptional(13) == std::set<Integer>{11, 17, 23});
    for (int g : {1, 6, 8, 14}) CHECK_THROWS_AS(excluded_primes_exceptional(g), PreconditionError);
}

TEST_CASE("construct then verify") {
    BuildOptions opts;
    opts.scan_bound = 5000;
    opts.rho_budget = 20000;
    for (int g : {6, 8, 9, 10}) {
        CAPTURE(g);
        const auto cert = build_certificate(g, opts);
        const auto r = check_hypotheses(cert.repair.f, cert.plan, 5000, 20000);
        INFO(failing(r));
        CHECK(all_hold(r));
        CHECK(verdict(r, g).kind == VerdictKind::MaximalAll);
    }
}

}
