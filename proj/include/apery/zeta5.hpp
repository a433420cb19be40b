#pragma once

#include "apery/interval.hpp"
#include "apery/polynomial.hpp"
#include "apery/recurrence.hpp"
#include "apery/report.hpp"

#include <optional>
#include <vector>

namespace apery::zeta5 {

/// The three coefficient polynomials of the zeta(5) difference equation
/// (degrees 3, 9, 8).
const IntPolynomial& a_poly(int i);

/// Exact evaluation a_i(n); n may be negative (the auxiliary recursions
/// reach the polynomials through reflection).
Int coeff_a(int i, const Int& n);

/// The difference equation in homogeneous four-term form, with leading
/// factor (n+1)^6 a_0(n).
RecurrenceSystem system();

/// Solutions ordered (q, p, p~) at the initial index n = 2.
SolutionTriple initial_state();

/// Exact sequences from the printed initial data up to n_max. q_n is
/// verified integral along the way.
struct Sequences {
    std::vector<Int> q;
    std::vector<Rat> p;
    std::vector<Rat> pt;
};
Sequences sequences(long n_max);

/// p_n / q_n in lowest terms plus a certified |zeta(5) - p_n/q_n| enclosure.
struct Approximation {
    Rat fraction;
    Interval error;
};
Approximation approximation(long n);

/// l_n = q_n zeta(5) - p_n and l~_n = q_n zeta(3) - p~_n as enclosures whose
/// width resolves the sign (precision escalates automatically; an entry with
/// unresolved sign is reported std::nullopt).
struct LinearFormValue {
    long n;
    std::optional<Interval> l;
    std::optional<Interval> lt;
};
std::vector<LinearFormValue> linear_forms(long n_max);

/// Roots of mu^3 + 2368 mu^2 - 752 mu - 16, ordered by increasing modulus.
struct CharacteristicRootsMu {
    Interval mu1, mu2, mu3;
};
CharacteristicRootsMu char_roots_mu(long digits);

/// Empirical growth rates log|x_n| / n at a finite index, with the limit
/// targets log|mu_2| and log|mu_3| attached for comparison.
struct RateReport {
    long n;
    std::optional<double> log_l;   // log|l_n| / n
    std::optional<double> log_lt;  // log|l~_n| / n
    double log_q, log_p, log_pt;
    double target_forms;   // log|mu_2|
    double target_coeffs;  // log|mu_3|
};
RateReport rate_report(long n);

/// q_n integral, 2 D_n^5 p_n integral, 2 D_n^3 p~_n integral for 1 <= n <= n_max.
VerificationReport integrality_check(long n_max);

/// (-1)^(n-1) q_n > 0 and likewise for p_n, p~_n, 1 <= n <= n_max.
VerificationReport alternation_check(long n_max);

/// Interval-certified l_n > 0 and l~_n < 0 for 1 <= n <= n_max.
VerificationReport sign_check(long n_max);

/// Cross products of the R5 series coefficients reproduce (q_n, p_n, p~_n)
/// exactly for 0 <= n <= n_max.
VerificationReport oracle_check(long n_max);

/// Published reference values reproduced by the suite: convergents for
/// n = 0..7 and error bounds for selected rows.
struct TableRow {
    long n;
    std::optional<Rat> fraction;        // reduced p_n/q_n, where printed
    std::optional<Rat> error_truncated; // printed truncation (rows 0..2)
    std::optional<Rat> error_bound;     // printed "< bound" rows
};
const std::vector<TableRow>& reference_table();

}  // namespace apery::zeta5
