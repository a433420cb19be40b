#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apery/decimal.hpp"
#include "apery/zeta.hpp"
#include "apery/zeta5.hpp"

using namespace apery;

TEST_CASE("coefficient polynomials at anchor points") {
    CHECK(zeta5::coeff_a(0, Int(0)) == -2871);
    CHECK(zeta5::coeff_a(0, Int(1)) == 9898);
    CHECK(zeta5::coeff_a(2, Int(0)) == -44541);
    CHECK(zeta5::coeff_a(2, Int(1)) == 765576);
    // a_1 carries the overall factor 2
    CHECK(zeta5::coeff_a(1, Int(0)) == 2 * Int(-60291));
    CHECK(zeta5::a_poly(0).degree() == 3);
    CHECK(zeta5::a_poly(1).degree() == 9);
    CHECK(zeta5::a_poly(2).degree() == 8);
}

TEST_CASE("sequences extend the printed initial data") {
    auto s = zeta5::sequences(7);
    CHECK(s.q[0] == -1);
    CHECK(s.q[1] == 42);
    CHECK(s.q[2] == -17934);
    CHECK(s.p[1] == Rat(87, 2));
    CHECK(s.p[2] == Rat(-1190161, 64));
    CHECK(s.pt[1] == Rat(101, 2));
    CHECK(s.pt[2] == Rat(-344923, 16));
}

TEST_CASE("convergents reproduce the published table fractions") {
    auto s = zeta5::sequences(7);
    for (const auto& row : zeta5::reference_table()) {
        if (!row.fraction) continue;
        REQUIRE(row.n <= 7);
        CHECK(s.p[row.n] / Rat(s.q[row.n]) == *row.fraction);
    }
    // spot check the exact reduced strings
    Rat f5 = s.p[5] / Rat(s.q[5]);
    CHECK(f5.get_num().get_str() == "81875586674776013003");
    CHECK(f5.get_den().get_str() == "78959779279372800000");
}

TEST_CASE("error enclosures sit below the published bounds") {
    for (const auto& row : zeta5::reference_table()) {
        if (!row.error_bound || row.n > 10) continue;
        auto a = zeta5::approximation(row.n);
        CHECK(a.error.hi < *row.error_bound);
    }
}

TEST_CASE("published error truncations lie inside the certified intervals") {
    // |zeta(5) - p_n/q_n| truncated to 9 digits reads 0.001213469 (n=1)
    // and 0.000000182 (n=2)
    for (const auto& row : zeta5::reference_table()) {
        if (!row.error_truncated) continue;
        auto a = zeta5::approximation(row.n);
        Rat t = *row.error_truncated;
        CHECK(t <= a.error.lo);
        CHECK(a.error.hi < t + pow10_neg(9));
    }
}

TEST_CASE("linear forms have the proven signs with certified intervals") {
    auto forms = zeta5::linear_forms(12);
    for (long n = 1; n <= 12; ++n) {
        REQUIRE(forms[n].l.has_value());
        REQUIRE(forms[n].lt.has_value());
        CHECK(forms[n].l->sign() == 1);
        CHECK(forms[n].lt->sign() == -1);
    }
    // l_0 = -zeta(5), l~_0 = -zeta(3)
    CHECK(forms[0].l->sign() == -1);
    CHECK(forms[0].lt->sign() == -1);
}

TEST_CASE("characteristic roots match their defining polynomial") {
    auto mu = zeta5::char_roots_mu(25);
    for (const Interval& r : {mu.mu1, mu.mu2, mu.mu3}) {
        CHECK(r.width() <= pow10_neg(25));
        // evaluate chi over the interval: must straddle zero
        Interval chi = r * r * r + Interval(Rat(2368)) * r * r - Interval(Rat(752)) * r -
                       Interval(Rat(16));
        CHECK(chi.contains_zero());
    }
    // Vieta: sum of roots = -2368, product = 16
    Interval sum = mu.mu1 + mu.mu2 + mu.mu3;
    CHECK(sum.contains(Rat(-2368)));
    CHECK((mu.mu1 * mu.mu2 * mu.mu3).contains(Rat(16)));
    // modulus ordering used by the rate targets
    CHECK(mu.mu1.abs().hi < mu.mu2.abs().lo);
    CHECK(mu.mu2.abs().hi < mu.mu3.abs().lo);
}

TEST_CASE("rate report carries the root targets") {
    auto r = zeta5::rate_report(40);
    CHECK(r.target_forms == doctest::Approx(-1.08607936).epsilon(1e-6));
    CHECK(r.target_coeffs == doctest::Approx(7.76998).epsilon(1e-4));
    REQUIRE(r.log_l.has_value());
    // at n = 40 the empirical rate is within the coarse expected window
    CHECK(*r.log_l == doctest::Approx(-1.086).epsilon(0.35));
    CHECK(r.log_q == doctest::Approx(7.77).epsilon(0.35));
}

TEST_CASE("verification reports over medium ranges") {
    CHECK(zeta5::integrality_check(60).passed());
    CHECK(zeta5::alternation_check(60).passed());
    CHECK(zeta5::sign_check(20).passed());
    CHECK(zeta5::oracle_check(8).passed());
}

TEST_CASE("q_n integrality is not an accident of small n") {
    auto s = zeta5::sequences(40);
    // denominators of p_n are nontrivial even though q_n stays integral
    CHECK(s.p[3].get_den() > 1);
    CHECK(s.q[40] != 0);
}
