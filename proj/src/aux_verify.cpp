#include "apery/aux_verify.hpp"

#include "apery/decimal.hpp"
#include "apery/roots.hpp"
#include "apery/series.hpp"
#include "apery/zeta.hpp"
#include "apery/zeta5.hpp"

#include <algorithm>
#include <stdexcept>

namespace apery::aux {

const IntPolynomial& b_poly(int i) {
    static const IntPolynomial b0 = -zeta5::a_poly(0).reflected();
    static const IntPolynomial b1 = zeta5::a_poly(2).reflected();
    static const IntPolynomial b2 = -zeta5::a_poly(1).reflected();
    switch (i) {
        case 0: return b0;
        case 1: return b1;
        case 2: return b2;
    }
    throw std::invalid_argument("b_poly: index must be 0, 1 or 2");
}

Int coeff_b(int i, const Int& n) { return b_poly(i).eval(n); }

const IntPolynomial& btilde_poly(int i) {
    static const IntPolynomial bt0({174, 957, 811, -5128, -13190, -932, 35648, 41218});
    static const IntPolynomial bt1({-37632, -40670, 495325, 308165, -2785973, -623249, 8618417,
                                    -1369195, -15230839, 8641603, 12425954, -14084302, 3874492});
    static const IntPolynomial bt2 =
        IntPolynomial({33408, -111012, -398634, 1507490, 2138687, -8524312, -9523224, 30257812,
                       37524471, -95912858, -69927236, 267014032, -201803328, 48802112}) *
        Int(2);
    switch (i) {
        case 0: return bt0;
        case 1: return bt1;
        case 2: return bt2;
    }
    throw std::invalid_argument("btilde_poly: index must be 0, 1 or 2");
}

Int coeff_btilde(int i, const Int& n) { return btilde_poly(i).eval(n); }

RecurrenceSystem system8() {
    RecurrenceSystem sys;
    sys.name = "aux8";
    sys.lead = [](long n) -> Int { return Int(n) * pow_int(Int(n + 1), 5) * coeff_b(0, Int(n - 1)); };
    sys.c0 = [](long n) -> Int { return Int(-2 * n) * coeff_b(1, Int(n)); };
    sys.cm1 = [](long n) -> Int { return -coeff_b(2, Int(n)); };
    sys.cm2 = [](long n) -> Int {
        return Int(2) * pow_int(Int(n - 1), 5) * Int(2 * n - 1) * coeff_b(0, Int(n));
    };
    return sys;
}

RecurrenceSystem system9() {
    RecurrenceSystem sys;
    sys.name = "aux9";
    sys.lead = [](long n) -> Int {
        return pow_int(Int(n), 3) * pow_int(Int(n + 1), 3) * coeff_btilde(0, Int(n - 1));
    };
    sys.c0 = [](long n) -> Int { return Int(-2 * n) * coeff_btilde(1, Int(n)); };
    sys.cm1 = [](long n) -> Int { return -coeff_btilde(2, Int(n)); };
    sys.cm2 = [](long n) -> Int {
        return Int(2 * n) * pow_int(Int(n - 1), 4) * Int(2 * n - 3) * coeff_btilde(0, Int(n));
    };
    return sys;
}

VerificationReport check_rational_solutions(const RecurrenceSystem& sys, const char* check_name,
                                            const std::vector<std::vector<Rat>>& seqs, long N) {
    VerificationReport rep;
    rep.check = check_name;
    rep.range_lo = 2;
    rep.range_hi = N;
    for (long n = 2; n <= N && rep.passed(); ++n) {
        Rat lead(sys.lead(n)), c0(sys.c0(n)), cm1(sys.cm1(n)), cm2(sys.cm2(n));
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            const auto& x = seqs[i];
            Rat residual = lead * x[n + 1] + c0 * x[n] + cm1 * x[n - 1] + cm2 * x[n - 2];
            if (residual != 0) {
                rep.fail(n, "sequence " + std::to_string(i) + " residual " +
                                to_decimal(residual, 6) + " != 0");
                break;
            }
        }
    }
    return rep;
}

namespace {

// Interval residual of the recurrence applied to the series values
// themselves (not rational): certified to contain zero once the residual
// width is below |largest term| * 1e-10, with escalating series precision.
bool interval_residual_contains_zero(const RecurrenceSystem& sys, Family f, long n) {
    for (long digits = 12; digits <= 4096; digits *= 2) {
        Interval next = series_enclosure(f, n + 1, digits);
        Interval cur = series_enclosure(f, n, digits);
        Interval prev = series_enclosure(f, n - 1, digits);
        Interval prev2 = series_enclosure(f, n - 2, digits);
        Rat lead(sys.lead(n)), c0(sys.c0(n)), cm1(sys.cm1(n)), cm2(sys.cm2(n));
        Interval residual = lead * next + c0 * cur + cm1 * prev + cm2 * prev2;
        Rat largest = std::max({rat_abs(lead * next.mid()), rat_abs(c0 * cur.mid()),
                                rat_abs(cm1 * prev.mid()), rat_abs(cm2 * prev2.mid())});
        if (residual.width() <= largest * pow10_neg(10)) return residual.contains_zero();
    }
    throw std::runtime_error("interval residual: precision budget exhausted");
}

VerificationReport verify_recursion(const RecurrenceSystem& sys, Family f, const char* name,
                                    long N, long interval_max) {
    std::vector<std::vector<Rat>> seqs(3);
    for (long n = 0; n <= N + 1; ++n) {
        LinearFormCoeffs lf = linear_form_coeffs(f, n);
        seqs[0].push_back(lf.u);
        seqs[1].push_back(lf.w);
        seqs[2].push_back(lf.v);
    }
    VerificationReport rep = check_rational_solutions(sys, name, seqs, N);
    for (long n = 2; n <= std::min(N, interval_max) && rep.passed(); ++n)
        if (!interval_residual_contains_zero(sys, f, n))
            rep.fail(n, "series-value residual enclosure excludes zero");
    return rep;
}

}  // namespace

VerificationReport verify_recursion_8(long N, long interval_max) {
    return verify_recursion(system8(), Family::R5, "aux-recursion-8", N, interval_max);
}

VerificationReport verify_recursion_9(long N, long interval_max) {
    return verify_recursion(system9(), Family::R5Tilde, "aux-recursion-9", N, interval_max);
}

CharacteristicRootsLambda char_roots_lambda(long digits) {
    static const IntPolynomial chi({4, -2368, -188, 1});
    auto roots = isolate_real_roots(chi, digits);
    if (roots.size() != 3)
        throw std::logic_error("char_roots_lambda: expected three real roots");
    std::sort(roots.begin(), roots.end(), [](const Interval& a, const Interval& b) {
        return rat_abs(a.mid()) < rat_abs(b.mid());
    });
    return {roots[0], roots[1], roots[2]};
}

VerificationReport verify_root_products(long digits) {
    VerificationReport rep;
    rep.check = "root-products";
    rep.range_lo = rep.range_hi = 0;
    CharacteristicRootsLambda l = char_roots_lambda(digits + 4);
    zeta5::CharacteristicRootsMu mu = zeta5::char_roots_mu(digits);
    if (!(l.l1 * l.l2).overlaps(mu.mu1)) rep.fail(0, "mu_1 != lambda_1 lambda_2");
    if (!(l.l1 * l.l3).overlaps(mu.mu2)) rep.fail(0, "mu_2 != lambda_1 lambda_3");
    if (!(l.l2 * l.l3).overlaps(mu.mu3)) rep.fail(0, "mu_3 != lambda_2 lambda_3");
    return rep;
}

AuxRateReport rates_aux(long n) {
    if (n < 1) throw std::invalid_argument("rates_aux: n must be >= 1");
    // Advance the recursion forward from oracle seeds rather than running
    // the O(n^2) partial-fraction oracle out to n.
    RecurrenceSystem sys = system8();
    SolutionTriple s;
    s.n = 2;
    s.states.resize(3);
    for (long m = 0; m <= 2; ++m) {
        LinearFormCoeffs lf = linear_form_coeffs(Family::R5, m);
        s.states[0][m] = lf.u;
        s.states[1][m] = lf.w;
        s.states[2][m] = lf.v;
    }
    advance_to(sys, s, std::max(n, 2l));
    int slot = n >= 2 ? 2 : static_cast<int>(n);
    Rat u = s.states[0][slot], w = s.states[1][slot], v = s.states[2][slot];

    AuxRateReport r;
    r.n = n;
    r.log_u = log_abs(u) / n;
    r.log_w = log_abs(w) / n;
    r.log_v = log_abs(v) / n;

    // r_n = u zeta(5) + w zeta(3) - v shrinks like lambda_1^n while the
    // coefficients grow like lambda_3^n; both decades must be beaten.
    for (long d = static_cast<long>(5.1 * static_cast<double>(n)) + 20; d <= 20000; d *= 2) {
        Interval rn = zeta_enclosure(5, d) * u + zeta_enclosure(3, d) * w - v;
        if (rn.sign() != 0 && rn.width() <= rat_abs(rn.mid()) * pow10_neg(3)) {
            r.log_r = log_abs(rn.mid()) / n;
            break;
        }
    }

    CharacteristicRootsLambda l = char_roots_lambda(16);
    r.target_coeffs = log_abs(l.l3.mid());
    r.target_forms = log_abs(l.l1.mid());
    return r;
}

}  // namespace apery::aux
