#pragma once

#include "apery/bigint.hpp"
#include "apery/interval.hpp"

#include <array>

namespace apery::gosper {

/// Exact 3x3 rational matrix; the product factors are upper triangular with
/// unit (3,3) entry, and prefix products keep both properties.
struct Mat3 {
    std::array<std::array<Rat, 3>, 3> m{};

    static Mat3 identity();
    Mat3 operator*(const Mat3& o) const;
    bool operator==(const Mat3& o) const { return m == o.m; }

    bool upper_triangular() const { return m[1][0] == 0 && m[2][0] == 0 && m[2][1] == 0; }

    /// Total bit size of all entries (cost proxy).
    std::size_t bit_size() const;
};

/// The n-th factor of the infinite product whose limit carries
/// (zeta(5), zeta(3), 1) in the third column. Rejects n = 0.
Mat3 factor(long n);

/// Product of factors 1..N in order (left fold).
Mat3 prefix_product(long N);

/// Same product evaluated as a balanced pairwise tree; bit-identical to the
/// fold by associativity of exact rational matrix multiplication.
Mat3 prefix_product_tree(long N);

/// Side-by-side accuracy of the matrix product at N factors against the
/// zeta(5) recursion at index n, with exact-entry bit sizes as cost proxy.
struct Comparison {
    long factors;
    long index;
    double gosper_digits_zeta5;     // correct decimal digits of the (1,3) entry
    double gosper_digits_zeta3;     // correct decimal digits of the (2,3) entry
    double recursion_digits_zeta5;  // correct digits of p_n/q_n
    std::size_t gosper_bits;
    std::size_t recursion_bits;
};
Comparison compare_with_recursion(long N, long n);

}  // namespace apery::gosper
