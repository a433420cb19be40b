#include "apery/gosper.hpp"

#include "apery/decimal.hpp"
#include "apery/zeta.hpp"
#include "apery/zeta5.hpp"

#include <stdexcept>

namespace apery::gosper {

Mat3 Mat3::identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
    return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat acc(0);
            for (int k = 0; k < 3; ++k) acc += m[i][k] * o.m[k][j];
            r.m[i][j] = acc;
        }
    return r;
}

std::size_t Mat3::bit_size() const {
    std::size_t bits = 0;
    for (const auto& row : m)
        for (const auto& x : row)
            bits += mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
                    mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
    return bits;
}

Mat3 factor(long n) {
    if (n < 1) throw std::invalid_argument("gosper factor: n must be >= 1");
    Mat3 f;
    Rat diag = Rat(-n) / Rat(2 * (2 * n + 1));
    f.m[0][0] = diag;
    f.m[0][1] = Rat(1) / Rat(2 * n * (2 * n + 1));
    f.m[0][2] = make_rat(Int(1), pow_int(Int(n), 4));
    f.m[1][1] = diag;
    f.m[1][2] = Rat(5) / Rat(4 * n * n);
    f.m[2][2] = 1;
    return f;
}

Mat3 prefix_product(long N) {
    if (N < 1) throw std::invalid_argument("prefix_product: N must be >= 1");
    Mat3 acc = factor(1);
    for (long n = 2; n <= N; ++n) {
        acc = acc * factor(n);
        enforce_bit_cap(acc.m[0][2].get_num());
    }
    return acc;
}

namespace {
Mat3 tree_product(long a, long b) {
    if (a == b) return factor(a);
    long mid = a + (b - a) / 2;
    return tree_product(a, mid) * tree_product(mid + 1, b);
}
}  // namespace

Mat3 prefix_product_tree(long N) {
    if (N < 1) throw std::invalid_argument("prefix_product_tree: N must be >= 1");
    return tree_product(1, N);
}

namespace {

double correct_digits(const Rat& value, long s) {
    for (long d = 64;; d *= 2) {
        Interval err = (zeta_enclosure(s, d) - value).abs();
        if (err.hi == 0) continue;  // exact hit is out of reach for these rationals
        if (err.lo > 0 && err.hi < 2 * err.lo) return -log10_abs(err.hi);
        if (d > 8192) return -log10_abs(err.hi);  // enclosure-limited estimate
    }
}

}  // namespace

Comparison compare_with_recursion(long N, long n) {
    Mat3 g = prefix_product(N);
    Comparison c;
    c.factors = N;
    c.index = n;
    c.gosper_digits_zeta5 = correct_digits(g.m[0][2], 5);
    c.gosper_digits_zeta3 = correct_digits(g.m[1][2], 3);
    c.gosper_bits = g.bit_size();

    zeta5::Approximation a = zeta5::approximation(n);
    c.recursion_digits_zeta5 = a.error.hi > 0 ? -log10_abs(a.error.hi) : 0.0;
    zeta5::Sequences s = zeta5::sequences(std::max(n, 2l));
    c.recursion_bits = mpz_sizeinbase(s.q[n].get_mpz_t(), 2) +
                       mpz_sizeinbase(s.p[n].get_num().get_mpz_t(), 2) +
                       mpz_sizeinbase(s.p[n].get_den().get_mpz_t(), 2);
    return c;
}

}  // namespace apery::gosper
