#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apery/gosper.hpp"
#include "apery/zeta.hpp"

using namespace apery;

TEST_CASE("factor entries at n = 1") {
    auto f = gosper::factor(1);
    CHECK(f.m[0][0] == Rat(-1, 6));
    CHECK(f.m[0][1] == Rat(1, 6));
    CHECK(f.m[0][2] == Rat(1));
    CHECK(f.m[1][1] == Rat(-1, 6));
    CHECK(f.m[1][2] == Rat(5, 4));
    CHECK(f.m[2][2] == Rat(1));
    CHECK(f.upper_triangular());
    CHECK_THROWS(gosper::factor(0));
}

TEST_CASE("prefix products stay upper triangular with unit corner") {
    for (long N : {1L, 2L, 5L, 17L}) {
        auto p = gosper::prefix_product(N);
        CHECK(p.upper_triangular());
        CHECK(p.m[2][2] == Rat(1));
    }
}

TEST_CASE("prefix product at N = 1 and N = 2 by hand") {
    auto p1 = gosper::prefix_product(1);
    CHECK(p1.m[0][2] == Rat(1));
    CHECK(p1.m[1][2] == Rat(5, 4));
    // p2 = f(1) * f(2): (1,3) entry = (-1/6)(1/16) + (1/6)(5/16) + 1
    auto p2 = gosper::prefix_product(2);
    CHECK(p2.m[0][2] == Rat(-1, 96) + Rat(5, 96) + Rat(1));
    CHECK(p2.m[1][2] == Rat(-1, 6) * Rat(5, 16) + Rat(5, 4));
}

TEST_CASE("fold and balanced tree give bit-identical products") {
    for (long N : {1L, 2L, 3L, 10L, 33L}) {
        CHECK(gosper::prefix_product(N) == gosper::prefix_product_tree(N));
    }
}

TEST_CASE("diagonal entries shrink strictly in magnitude") {
    auto p5 = gosper::prefix_product(5);
    auto p6 = gosper::prefix_product(6);
    CHECK(rat_abs(p6.m[0][0]) < rat_abs(p5.m[0][0]));
    CHECK(rat_abs(p6.m[1][1]) < rat_abs(p5.m[1][1]));
}

TEST_CASE("third column converges to the zeta values") {
    auto p = gosper::prefix_product(40);
    Interval z5 = zeta_enclosure(5, 40);
    Interval z3 = zeta_enclosure(3, 40);
    CHECK((z5 - p.m[0][2]).abs().hi < pow10_neg(25));
    CHECK((z3 - p.m[1][2]).abs().hi < pow10_neg(25));
}

TEST_CASE("comparison report orders the methods sensibly") {
    auto c = gosper::compare_with_recursion(60, 14);
    CHECK(c.factors == 60);
    CHECK(c.index == 14);
    // recursion reaches far more digits per bit of state
    CHECK(c.recursion_digits_zeta5 > 45.0);
    CHECK(c.gosper_digits_zeta5 > 30.0);
    CHECK(c.gosper_digits_zeta5 < c.recursion_digits_zeta5);
    CHECK(c.gosper_bits > c.recursion_bits);
    // near-zero information at the degenerate comparison point
    auto tiny = gosper::compare_with_recursion(1, 0);
    CHECK(tiny.gosper_digits_zeta5 < 3.0);
    CHECK(tiny.recursion_digits_zeta5 < 1.0);
}
