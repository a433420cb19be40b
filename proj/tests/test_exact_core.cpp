#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apery/bigint.hpp"
#include "apery/decimal.hpp"
#include "apery/interval.hpp"
#include "apery/roots.hpp"
#include "apery/zeta.hpp"

#include <random>

using namespace apery;

TEST_CASE("lcm_upto small values and prime-power jumps") {
    CHECK(lcm_upto(1) == 1);
    CHECK(lcm_upto(2) == 2);
    CHECK(lcm_upto(6) == 60);
    CHECK(lcm_upto(10) == 2520);
    // D_n changes exactly at prime powers
    CHECK(lcm_upto(8) == 840);
    CHECK(lcm_upto(9) == 2520);
    CHECK_THROWS(lcm_upto(0));
}

TEST_CASE("lcm_upto is multiplicative over its prime-power factorization") {
    // D_30 = 2^4 * 3^3 * 5^2 * 7 * 11 * 13 * 17 * 19 * 23 * 29
    Int expect = Int(16) * 27 * 25 * 7 * 11 * 13 * 17 * 19 * 23 * 29;
    CHECK(lcm_upto(30) == expect);
}

namespace {
// Independent Bernoulli oracle: the classical recurrence
// sum_{j=0..m} C(m+1, j) B_j = 0, B_0 = 1 (with B_1 = -1/2).
Rat bernoulli_by_recurrence(long m) {
    std::vector<Rat> b(m + 1);
    b[0] = 1;
    for (long k = 1; k <= m; ++k) {
        Rat acc(0);
        for (long j = 0; j < k; ++j)
            acc += Rat(binomial(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(j))) *
                   b[j];
        b[k] = -acc / Rat(k + 1);
    }
    return b[m];
}
}  // namespace

TEST_CASE("bernoulli matches the defining recurrence") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(4) == Rat(-1, 30));
    CHECK(bernoulli(12) == Rat(-691, 2730));
    for (long m = 2; m <= 60; m += 2) CHECK(bernoulli(m) == bernoulli_by_recurrence(m));
    CHECK_THROWS(bernoulli(3));
}

TEST_CASE("zeta enclosures bracket the classical leading digits") {
    // truncated reference digits; each enclosure must contain the value
    auto dec = [](const char* digits, int places) {
        return make_rat(Int(digits, 10), pow10_int(static_cast<unsigned long>(places)));
    };
    Interval z2 = zeta_enclosure(2, 30);
    Interval z3 = zeta_enclosure(3, 30);
    Interval z5 = zeta_enclosure(5, 30);
    CHECK(z2.width() <= pow10_neg(30));
    // zeta(2) = 1.644934066848226436..., zeta(3) = 1.202056903159594285...,
    // zeta(5) = 1.036927755143369926...
    CHECK(z2.lo > dec("1644934066848226436", 18));
    CHECK(z2.hi < dec("1644934066848226437", 18));
    CHECK(z3.lo > dec("1202056903159594285", 18));
    CHECK(z3.hi < dec("1202056903159594286", 18));
    CHECK(z5.lo > dec("1036927755143369926", 18));
    CHECK(z5.hi < dec("1036927755143369927", 18));
}

TEST_CASE("zeta enclosures are nested as precision increases") {
    Interval coarse = zeta_enclosure(7, 15);
    Interval fine = zeta_enclosure(7, 120);
    Interval coarse_again = zeta_enclosure(7, 10);
    CHECK(coarse.contains(fine));
    // the cache keeps the tightest enclosure, so asking for less precision
    // afterwards can't widen the answer
    CHECK(coarse_again.contains(fine));
    CHECK(coarse.contains(coarse_again));
}

TEST_CASE("to_decimal truncates toward zero") {
    CHECK(to_decimal(Rat(29, 28), 6) == "1.035714");
    CHECK(to_decimal(Rat(-29, 28), 6) == "-1.035714");
    CHECK(to_decimal(Rat(1, 3000), 3) == "0.000");
    CHECK(to_decimal(Rat(7), 0) == "7");
    CHECK(to_decimal(Rat(0), 4) == "0.0000");
}

TEST_CASE("interval rendering keeps only agreed digits") {
    Interval iv(make_rat(Int(995), Int(1000)), make_rat(Int(1005), Int(1000)));
    std::string s = to_decimal(iv, 6);
    CHECK(s.find("±") != std::string::npos);
    CHECK(to_decimal(Interval(make_rat(Int(12345), Int(10000)), make_rat(Int(12346), Int(10000))), 4) == "1.234±0.0001");
    CHECK(to_decimal(Interval(Rat(1, 3), Rat(1, 3)), 8) == "0.33333333");
}

TEST_CASE("interval arithmetic is outward-sound (randomized containment)") {
    std::mt19937_64 rng(20260826);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40), off(0, 7);
    for (int iter = 0; iter < 400; ++iter) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng));
        Interval ia(a - Rat(off(rng), 97), a + Rat(off(rng), 89));
        Interval ib(b - Rat(off(rng), 83), b + Rat(off(rng), 101));
        CHECK((ia + ib).contains(a + b));
        CHECK((ia - ib).contains(a - b));
        CHECK((ia * ib).contains(a * b));
        CHECK(ia.abs().contains(rat_abs(a)));
        if (!ib.contains_zero()) CHECK((ia / ib).contains(a / b));
    }
}

TEST_CASE("interval sign and intersection") {
    CHECK(Interval(Rat(1, 7), Rat(2)).sign() == 1);
    CHECK(Interval(Rat(-2), Rat(-1, 9)).sign() == -1);
    CHECK(Interval(Rat(-1), Rat(1)).sign() == 0);
    Interval a(Rat(0), Rat(2)), b(Rat(1), Rat(3));
    Interval c = a.intersect(b);
    CHECK(c.lo == 1);
    CHECK(c.hi == 2);
    CHECK_THROWS(a.intersect(Interval(Rat(5), Rat(6))));
}

TEST_CASE("root isolation: quadratic with known roots") {
    // (x - 2)(x + 3) = x^2 + x - 6
    IntPolynomial p({-6, 1, 1});
    auto roots = isolate_real_roots(p, 20);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].contains(Rat(-3)));
    CHECK(roots[1].contains(Rat(2)));
    CHECK(roots[0].width() <= pow10_neg(20));
}

TEST_CASE("root isolation: no real roots and clustered roots") {
    CHECK(isolate_real_roots(IntPolynomial({1, 0, 1}), 10).empty());  // x^2 + 1
    // x^3 - x has roots -1, 0, 1
    auto roots = isolate_real_roots(IntPolynomial({0, -1, 0, 1}), 12);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].contains(Rat(-1)));
    CHECK(roots[1].contains(Rat(0)));
    CHECK(roots[2].contains(Rat(1)));
    // (100x - 1)(100x - 3) = 10000x^2 - 400x + 3: two nearby roots separated
    auto close_pair = isolate_real_roots(IntPolynomial({3, -400, 10000}), 15);
    REQUIRE(close_pair.size() == 2);
    CHECK(close_pair[0].contains(Rat(1, 100)));
    CHECK(close_pair[1].contains(Rat(3, 100)));
    CHECK(close_pair[0].hi < close_pair[1].lo);
}

TEST_CASE("root isolation rejects non-squarefree input") {
    // (x - 1)^2
    CHECK_THROWS_AS(isolate_real_roots(IntPolynomial({1, -2, 1}), 10), NotSquarefreeError);
}

TEST_CASE("sqrt enclosure") {
    Interval r = sqrt_enclosure(Rat(2), 25);
    CHECK(r.width() <= pow10_neg(25));
    CHECK(r.lo * r.lo <= 2);
    CHECK(r.hi * r.hi >= 2);
    CHECK(sqrt_enclosure(Rat(49, 4), 10).contains(Rat(7, 2)));
}

TEST_CASE("bit cap enforcement throws and resets") {
    set_max_bits(64);
    Int big = pow_int(Int(10), 100);
    CHECK_THROWS_AS(enforce_bit_cap(big), BitLimitError);
    set_max_bits(0);
    CHECK_NOTHROW(enforce_bit_cap(big));
}
