#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apery/decimal.hpp"
#include "apery/enclose.hpp"
#include "apery/zeta23.hpp"

using namespace apery;

TEST_CASE("coefficient polynomials at anchor points") {
    CHECK(zeta23::coeff_a(0, Int(0)) == 153);
    CHECK(zeta23::coeff_a(0, Int(1)) == 946 - 731 + 153);
    CHECK(zeta23::coeff_a(1, Int(0)) == 2 * Int(1071));
    CHECK(zeta23::coeff_a(2, Int(0)) == -184);
    CHECK(zeta23::a_poly(0).degree() == 2);
    CHECK(zeta23::a_poly(1).degree() == 6);
    CHECK(zeta23::a_poly(2).degree() == 5);
}

TEST_CASE("sequences extend the printed initial data") {
    auto s = zeta23::sequences(10);
    CHECK(s.q[0] == 1);
    CHECK(s.q[1] == 14);
    CHECK(s.q[2] == 978);
    CHECK(s.p[0] == 0);
    CHECK(s.p[1] == 17);
    CHECK(s.p[2] == Rat(9405, 8));
    CHECK(s.pt[1] == 23);
    CHECK(s.pt[2] == Rat(6435, 4));
}

TEST_CASE("convergents approach zeta(3) and zeta(2) simultaneously") {
    auto s = zeta23::sequences(12);
    Rat q(s.q[12]);
    auto l3 = linear_form_enclosure(q, s.p[12], 3, 60);
    auto l2 = linear_form_enclosure(q, s.pt[12], 2, 60);
    REQUIRE(l3.has_value());
    REQUIRE(l2.has_value());
    // |zeta(3) - p'/q'| and |zeta(2) - p~'/q'| both far below 1e-12 by n=12
    CHECK(l3->abs().hi / q < pow10_neg(12));
    CHECK(l2->abs().hi / q < pow10_neg(12));
}

TEST_CASE("positivity and integrality sweeps") {
    CHECK(zeta23::positivity_check(80).passed());
    CHECK(zeta23::integrality_check(80).passed());
    // sharpness: p'_2 = 9405/8 needs the full D_2^3 = 8
    auto s = zeta23::sequences(2);
    CHECK(!is_integer(Rat(lcm_upto(2) * lcm_upto(2)) * s.p[2]));
    CHECK(is_integer(Rat(pow_int(lcm_upto(2), 3)) * s.p[2]));
}

TEST_CASE("oracle equivalence over a short range") {
    CHECK(zeta23::oracle_check(8).passed());
}

TEST_CASE("characteristic cubic: one real root and the complex pair modulus") {
    auto mu = zeta23::char_roots_mu_prime(20);
    // chi(mu) = mu^3 - 220 mu^2 + 32 mu - 16 must straddle zero
    Interval chi = mu.mu3 * mu.mu3 * mu.mu3 - Interval(Rat(220)) * mu.mu3 * mu.mu3 +
                   Interval(Rat(32)) * mu.mu3 - Interval(Rat(16));
    CHECK(chi.contains_zero());
    CHECK(mu.mu3.width() <= pow10_neg(20));
    // |mu_1'| = |mu_2'| = sqrt(16 / mu_3) since the root product is 16
    Interval square = mu.pair_modulus * mu.pair_modulus * mu.mu3;
    CHECK(square.contains(Rat(16)));
    // printed values: 219.85478039... and modulus ~ 0.26977
    CHECK(mu.mu3.lo > make_rat(Int(21985478039), pow10_int(8)));
    CHECK(mu.mu3.hi < make_rat(Int(21985478040), pow10_int(8)));
    CHECK(mu.pair_modulus.lo > make_rat(Int(26976), Int(100000)));
    CHECK(mu.pair_modulus.hi < make_rat(Int(26978), Int(100000)));
}

TEST_CASE("rate report carries the root targets") {
    auto r = zeta23::rate_report(40);
    CHECK(r.target_forms == doctest::Approx(-1.31018925).epsilon(1e-6));
    CHECK(r.target_coeffs == doctest::Approx(5.39297).epsilon(1e-4));
    REQUIRE(r.log_l.has_value());
    REQUIRE(r.log_lt.has_value());
    CHECK(*r.log_l == doctest::Approx(-1.31).epsilon(0.3));
    CHECK(r.log_q == doctest::Approx(5.39).epsilon(0.3));
}

TEST_CASE("q' integrality guard trips on bad initial data") {
    // sequences() verifies integrality internally; a q'_n that leaves Z
    // would throw rather than pass silently. Sanity: long run stays clean.
    CHECK_NOTHROW(zeta23::sequences(150));
}
