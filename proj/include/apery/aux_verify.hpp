#pragma once

#include "apery/interval.hpp"
#include "apery/polynomial.hpp"
#include "apery/recurrence.hpp"
#include "apery/report.hpp"

#include <optional>
#include <vector>

namespace apery::aux {

/// b polynomials are reflections of the zeta5 a polynomials
/// (b0(n) = -a0(-n), b1(n) = a2(-n), b2(n) = -a1(-n)); the printed
/// identities stay load-bearing because this is the only definition.
const IntPolynomial& b_poly(int i);
Int coeff_b(int i, const Int& n);

/// b~ polynomials transcribed directly (degrees 7, 12, 13).
const IntPolynomial& btilde_poly(int i);
Int coeff_btilde(int i, const Int& n);

/// Difference equation satisfied by the R5 coefficient rows (u, w, v).
RecurrenceSystem system8();

/// Difference equation satisfied by the R5~ coefficient rows; its last term
/// applies to the same solution sequence as the rest.
RecurrenceSystem system9();

/// Exact residual check of a four-term recurrence against explicitly given
/// sequences (each of length N+2, indices 0..N+1), checked at 2 <= n <= N.
/// Exposed so negative controls can feed perturbed data through the same path.
VerificationReport check_rational_solutions(const RecurrenceSystem& sys, const char* check_name,
                                            const std::vector<std::vector<Rat>>& seqs, long N);

/// The oracle's (u, w, v) rows satisfy the first auxiliary recursion exactly
/// for 2 <= n <= N; the interval residual for the series values r_n contains
/// zero for n <= min(N, interval_max).
VerificationReport verify_recursion_8(long N, long interval_max = 10);

/// Same for the tilde rows and r~_n.
VerificationReport verify_recursion_9(long N, long interval_max = 10);

/// Roots of lambda^3 - 188 lambda^2 - 2368 lambda + 4, increasing modulus.
struct CharacteristicRootsLambda {
    Interval l1, l2, l3;
};
CharacteristicRootsLambda char_roots_lambda(long digits);

/// mu_1 = lambda_1 lambda_2, mu_2 = lambda_1 lambda_3, mu_3 = lambda_2 lambda_3,
/// checked as interval containments at the given precision.
VerificationReport verify_root_products(long digits);

/// Empirical growth rates of the coefficient rows and the series value at a
/// finite index, with the limit targets log lambda_3 and log lambda_1.
struct AuxRateReport {
    long n;
    double log_u, log_w, log_v;
    std::optional<double> log_r;
    double target_coeffs;  // log lambda_3
    double target_forms;   // log lambda_1
};
AuxRateReport rates_aux(long n);

}  // namespace apery::aux
