#pragma once

#include "apery/interval.hpp"
#include "apery/polynomial.hpp"
#include "apery/recurrence.hpp"
#include "apery/report.hpp"

#include <optional>
#include <vector>

namespace apery::zeta23 {

/// Coefficient polynomials of the simultaneous zeta(3)/zeta(2) difference
/// equation (degrees 2, 6, 5).
const IntPolynomial& a_poly(int i);
Int coeff_a(int i, const Int& n);

RecurrenceSystem system();
SolutionTriple initial_state();

/// Exact (q', p', p~') from the printed initial data; q' verified integral.
struct Sequences {
    std::vector<Int> q;
    std::vector<Rat> p;
    std::vector<Rat> pt;
};
Sequences sequences(long n_max);

/// Real root of mu^3 - 220 mu^2 + 32 mu - 16 plus the modulus of the
/// complex pair, recovered as sqrt(16 / mu_3) (the root product is 16 and
/// the pair has equal moduli); the pair is never represented directly.
struct CharacteristicRootsMuPrime {
    Interval mu3;
    Interval pair_modulus;
};
CharacteristicRootsMuPrime char_roots_mu_prime(long digits);

/// Empirical rates log|l'_n|/n, log|l~'_n|/n, log q'_n / n with the limit
/// targets log|mu_2| (= log pair modulus) and log mu_3.
struct RateReport {
    long n;
    std::optional<double> log_l;
    std::optional<double> log_lt;
    double log_q, log_p, log_pt;
    double target_forms;
    double target_coeffs;
};
RateReport rate_report(long n);

/// q'_n integral, D_n^3 p'_n integral, D_n^2 p~'_n integral, 1 <= n <= n_max.
VerificationReport integrality_check(long n_max);

/// q'_n, p'_n, p~'_n > 0 for 1 <= n <= n_max.
VerificationReport positivity_check(long n_max);

/// Cross products of the R23 series coefficients reproduce the recursion
/// output exactly for 0 <= n <= n_max.
VerificationReport oracle_check(long n_max);

}  // namespace apery::zeta23
