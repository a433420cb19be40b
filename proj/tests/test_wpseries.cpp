#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apery/series.hpp"
#include "apery/zeta.hpp"

using namespace apery;

TEST_CASE("summand values at hand-computed points") {
    // n = 0, R5: term = (1/2)(2k) / k^6 = 1/k^5
    CHECK(summand_value(Family::R5, 0, 1) == Rat(1));
    CHECK(summand_value(Family::R5, 0, 3) == Rat(1, 243));
    // n = 0, R5~: term = -(1/2)(2k) * k * k / k^6 = -1/k^3
    CHECK(summand_value(Family::R5Tilde, 0, 2) == Rat(-1, 8));
    // n = 1, R5: numerator (2k+1)(k-1)(k+2) vanishes at k = 1
    CHECK(summand_value(Family::R5, 1, 1) == Rat(0));
    // k = 2: (1/2) * (2k+1)(k-1)(k+2) / (k(k+1))^6 = (1/2) * 5*1*4 / 6^6
    CHECK(summand_value(Family::R5, 1, 2) == make_rat(Int(5 * 1 * 4), Int(2 * 46656)));
    // n = 0, R23: term = -1/k^3; R23~: term = +k/k^3 = 1/k^2
    CHECK(summand_value(Family::R23, 0, 5) == Rat(-1, 125));
    CHECK(summand_value(Family::R23Tilde, 0, 5) == Rat(1, 25));
    CHECK_THROWS(summand_value(Family::R5, 0, 0));
}

TEST_CASE("partial fractions recombine to the summand (pointwise identity)") {
    for (Family f : {Family::R5, Family::R5Tilde, Family::R23, Family::R23Tilde}) {
        for (long n = 0; n <= 6; ++n) {
            PFDecomposition pf = partial_fractions(f, n);
            // rational functions of denominator degree e(n+1) agreeing at
            // e(n+1)+1 points are equal
            long points = static_cast<long>(pf.e) * (n + 1) + 1;
            for (long k = 1; k <= points; ++k) {
                Rat recombined(0);
                for (long j = 0; j <= n; ++j)
                    for (int s = 1; s <= pf.e; ++s)
                        recombined += pf.A[j][s - 1] /
                                      Rat(pow_int(Int(k + j), static_cast<unsigned long>(s)));
                CHECK(recombined == summand_value(f, n, k));
            }
        }
    }
}

TEST_CASE("column sums vanish exactly where the linear-form claim requires") {
    for (long n = 0; n <= 8; ++n) {
        for (Family f : {Family::R5, Family::R5Tilde}) {
            PFDecomposition pf = partial_fractions(f, n);
            CHECK(pf.column_sum(1) == 0);
            CHECK(pf.column_sum(2) == 0);
            CHECK(pf.column_sum(4) == 0);
            CHECK(pf.column_sum(6) == 0);
        }
        for (Family f : {Family::R23, Family::R23Tilde}) {
            PFDecomposition pf = partial_fractions(f, n);
            CHECK(pf.column_sum(1) == 0);
        }
    }
    CHECK(structure_check(8).passed());
}

TEST_CASE("linear form coefficients at small n match hand calculations") {
    auto lf = linear_form_coeffs(Family::R5, 0);
    CHECK(lf.u == 1);
    CHECK(lf.w == 0);
    CHECK(lf.v == 0);
    lf = linear_form_coeffs(Family::R5, 1);
    CHECK(lf.u == 9);
    CHECK(lf.w == 33);
    CHECK(lf.v == 49);
    lf = linear_form_coeffs(Family::R5, 2);
    CHECK(lf.u == 469);
    CHECK(lf.w == Rat(6125, 4));
    CHECK(lf.v == Rat(74463, 32));
    lf = linear_form_coeffs(Family::R5Tilde, 1);
    CHECK(lf.u == 2);
    CHECK(lf.w == 12);
    CHECK(lf.v == Rat(33, 2));
    lf = linear_form_coeffs(Family::R5Tilde, 2);
    CHECK(lf.u == 552);
    CHECK(lf.w == 1764);
    CHECK(lf.v == Rat(43085, 16));
    // the tilde family evaluates to -zeta(3) at n = 0
    lf = linear_form_coeffs(Family::R5Tilde, 0);
    CHECK(lf.u == 0);
    CHECK(lf.w == -1);
    CHECK(lf.v == 0);
}

TEST_CASE("cross products reproduce the recursion's initial data") {
    auto c0 = cross_products(0);
    CHECK(c0[0] == -1);
    CHECK(c0[1] == 0);
    CHECK(c0[2] == 0);
    auto c1 = cross_products(1);
    CHECK(c1[0] == 42);
    CHECK(c1[1] == Rat(87, 2));
    CHECK(c1[2] == Rat(101, 2));
    auto c2 = cross_products(2);
    CHECK(c2[0] == -17934);
    CHECK(c2[1] == Rat(-1190161, 64));
    CHECK(c2[2] == Rat(-344923, 16));
}

TEST_CASE("zeta23 cross products reproduce the printed initial data") {
    auto c0 = cross_products23(0);
    CHECK(c0[0] == 1);
    CHECK(c0[1] == 0);
    CHECK(c0[2] == 0);
    auto c1 = cross_products23(1);
    CHECK(c1[0] == 14);
    CHECK(c1[1] == 17);
    CHECK(c1[2] == 23);
    auto c2 = cross_products23(2);
    CHECK(c2[0] == 978);
    CHECK(c2[1] == Rat(9405, 8));
    CHECK(c2[2] == Rat(6435, 4));
}

TEST_CASE("series enclosure overlaps the exact linear form value") {
    // The reachable width scales with the tail decay k^-(order*(n+1)-deg):
    // the R23 families decay slowly at small n, so ask for fewer digits there.
    for (Family f : {Family::R5, Family::R5Tilde, Family::R23, Family::R23Tilde}) {
        for (long n = 0; n <= 4; ++n) {
            long digits = is_r5(f) ? 3 * n + 6 : n + 3;
            auto lf = linear_form_coeffs(f, n);
            long s_hi = is_r5(f) ? 5 : 3;
            long s_lo = is_r5(f) ? 3 : 2;
            Interval exact = zeta_enclosure(s_hi, digits + 10) * lf.u +
                             zeta_enclosure(s_lo, digits + 10) * lf.w - Interval(lf.v);
            Interval direct = series_enclosure(f, n, digits);
            CHECK(direct.overlaps(exact));
            CHECK(direct.width() <= pow10_neg(static_cast<unsigned long>(digits)));
        }
    }
}

TEST_CASE("series enclosure reaches high precision once the tail is steep") {
    Interval deep = series_enclosure(Family::R5, 3, 40);
    CHECK(deep.width() <= pow10_neg(40));
    Interval exact = zeta_enclosure(5, 50) * Interval(linear_form_coeffs(Family::R5, 3).u) +
                     zeta_enclosure(3, 50) * Interval(linear_form_coeffs(Family::R5, 3).w) -
                     Interval(linear_form_coeffs(Family::R5, 3).v);
    CHECK(deep.overlaps(exact));
}

TEST_CASE("series enclosures certify the published signs") {
    CHECK(wp_sign_check(8).passed());
    CHECK(series_enclosure(Family::R5, 3, 20).sign() == 1);
    CHECK(series_enclosure(Family::R5Tilde, 3, 20).sign() == -1);
}

TEST_CASE("denominator inclusions for the coefficient rows") {
    CHECK(wp_integrality_check(12).passed());
    // sharpness at n = 2: 2 w_2 = 6125/2 is not integral without D_n^2
    auto lf = linear_form_coeffs(Family::R5, 2);
    CHECK(!is_integer(Rat(2) * lf.w));
    CHECK(is_integer(Rat(2) * Rat(lcm_upto(2) * lcm_upto(2)) * lf.w));
}
