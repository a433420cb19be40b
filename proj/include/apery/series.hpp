#pragma once

#include "apery/bigint.hpp"
#include "apery/interval.hpp"
#include "apery/polynomial.hpp"
#include "apery/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace apery {

/// The four very-well-poised summand families:
///   R5       r_n,  sixth-order poles, linear forms in 1, zeta(3), zeta(5)
///   R5Tilde  r~_n, sixth-order poles, ditto
///   R23      r'_n, third-order poles, linear forms in 1, zeta(2), zeta(3)
///   R23Tilde r~'_n, third-order poles, ditto
enum class Family { R5, R5Tilde, R23, R23Tilde };

const char* family_name(Family f);
int pole_order(Family f);
bool is_r5(Family f);

/// The k-th summand as prefactor * numerator(k) / prod_{j=0..n} (k+j)^e.
/// The half-integer factor (k + n/2) is cleared into the numerator as
/// (2k + n) with a 1/2 prefactor, so the polynomial stays over Z.
struct SummandSpec {
    Family family;
    long n;
    Rat prefactor;
    IntPolynomial numerator;
};

SummandSpec build_summand(Family f, long n);

/// Exact value of the k-th term, k >= 1.
Rat summand_value(Family f, long n, long k);

/// Exact coefficients A[j][s-1] of the expansion
///   summand(k) = sum_{j=0..n} sum_{s=1..e} A_{j,s} / (k+j)^s.
struct PFDecomposition {
    Family family;
    long n;
    int e;
    std::vector<std::array<Rat, 6>> A;  // [j][s-1]; entries s > e stay zero

    /// Column sum over j for a fixed power s.
    Rat column_sum(int s) const;
};

PFDecomposition partial_fractions(Family f, long n);

/// Summing the partial fractions over k >= 1 turns each s-layer into
/// zeta(s) - H_{j,s}; the surviving zeta coefficients and the accumulated
/// rational part. For R5 families (u, w, v) multiply (zeta(5), zeta(3), 1);
/// for R23 families (zeta(3), zeta(2), 1). The series value is
/// u*zeta + w*zeta' - v. Throws if a zeta power that the linear-form claim
/// excludes survives with a nonzero coefficient.
struct LinearFormCoeffs {
    Family family;
    long n;
    Rat u;
    Rat w;
    Rat v;
};

LinearFormCoeffs linear_form_coeffs(Family f, long n);
LinearFormCoeffs linear_form_coeffs(const PFDecomposition& pf);

/// Cross products of the R5 and R5Tilde coefficient rows:
/// (q_n, p_n, p~_n) = (u w~ - u~ w, w~ v - w v~, u v~ - u~ v).
std::array<Rat, 3> cross_products(long n);

/// The zeta(2)/zeta(3) analog, with the determinant orientation fixed by
/// the printed initial data q'_0 = 1: (q'_n, p'_n, p~'_n).
std::array<Rat, 3> cross_products23(long n);

/// Column sums vanish for every zeta power the linear-form claim excludes:
/// s in {1, 2, 4, 6} for the R5 families, s = 1 for the R23 families,
/// 0 <= n <= n_max.
VerificationReport structure_check(long n_max);

/// r_n > 0, r~_n < 0 (sign-certified series enclosures) and all six R5
/// coefficient rows positive, for 1 <= n <= n_max.
VerificationReport wp_sign_check(long n_max);

/// Inclusions 2u_n, 2D_n^2 w_n, 2D_n^5 v_n integral, plus the tilde
/// counterparts, for 1 <= n <= n_max.
VerificationReport wp_integrality_check(long n_max);

/// Enclosure of the series value of width <= 10^(-digits): exact partial
/// sum to K terms plus a certified tail (intersection of a direct k^-(g+1)
/// majorant with per-pole integral sandwiches of the partial fractions; the
/// s = 1 layer telescopes exactly). K doubles until the width target is met.
Interval series_enclosure(Family f, long n, long digits);

}  // namespace apery
