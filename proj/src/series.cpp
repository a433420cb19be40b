#include "apery/series.hpp"

#include <stdexcept>

namespace apery {

const char* family_name(Family f) {
    switch (f) {
        case Family::R5: return "R5";
        case Family::R5Tilde: return "R5~";
        case Family::R23: return "R23";
        case Family::R23Tilde: return "R23~";
    }
    throw std::logic_error("unreachable");
}

int pole_order(Family f) { return is_r5(f) ? 6 : 3; }

bool is_r5(Family f) { return f == Family::R5 || f == Family::R5Tilde; }

SummandSpec build_summand(Family f, long n) {
    if (n < 0) throw std::invalid_argument("build_summand: n must be >= 0");
    auto lin = [](long c) { return IntPolynomial::linear(Int(c)); };  // k + c
    SummandSpec sp;
    sp.family = f;
    sp.n = n;
    if (is_r5(f)) {
        bool tilde = f == Family::R5Tilde;
        long j0 = tilde ? 0 : 1;
        IntPolynomial num({Int(n), Int(2)});  // 2k + n, clearing (k + n/2)
        for (long j = j0; j <= n; ++j) num = num * lin(-j);
        for (long j = j0; j <= n; ++j) num = num * lin(n + j);
        sp.numerator = num * pow_int(factorial(static_cast<unsigned long>(n)), 4);
        sp.prefactor = tilde ? Rat(-1, 2) : Rat(1, 2);
    } else {
        bool tilde = f == Family::R23Tilde;
        long j0 = tilde ? 0 : 1;
        IntPolynomial num = IntPolynomial::constant(Int(1));
        for (long j = j0; j <= n; ++j) num = num * lin(-j);
        sp.numerator = num * pow_int(factorial(static_cast<unsigned long>(n)), 2);
        sp.prefactor = tilde ? Rat(1) : Rat(-1);
    }
    return sp;
}

namespace {

Rat summand_value(const SummandSpec& sp, long k) {
    Int den = 1;
    unsigned long e = static_cast<unsigned long>(pole_order(sp.family));
    for (long j = 0; j <= sp.n; ++j) den *= pow_int(Int(k + j), e);
    return sp.prefactor * make_rat(sp.numerator.eval(Int(k)), den);
}

using Series = std::vector<Rat>;  // truncated power series, coefficient of t^m at [m]

Series mul_trunc(const Series& a, const Series& b, std::size_t len) {
    Series r(len, Rat(0));
    for (std::size_t i = 0; i < len && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series invert_trunc(const Series& d, std::size_t len) {
    if (d.empty() || d[0] == 0) throw std::domain_error("series inversion: zero constant term");
    Series inv(len, Rat(0));
    inv[0] = Rat(1) / d[0];
    for (std::size_t m = 1; m < len; ++m) {
        Rat acc(0);
        for (std::size_t i = 1; i <= m && i < d.size(); ++i) acc += d[i] * inv[m - i];
        inv[m] = -acc / d[0];
    }
    return inv;
}

}  // namespace

Rat summand_value(Family f, long n, long k) {
    if (k < 1) throw std::invalid_argument("summand_value: k must be >= 1");
    return summand_value(build_summand(f, n), k);
}

Rat PFDecomposition::column_sum(int s) const {
    Rat acc(0);
    for (const auto& row : A) acc += row[static_cast<std::size_t>(s - 1)];
    return acc;
}

PFDecomposition partial_fractions(Family f, long n) {
    SummandSpec sp = build_summand(f, n);
    const int e = pole_order(f);
    const std::size_t len = static_cast<std::size_t>(e);
    if (sp.numerator.degree() >= e * (n + 1))
        throw std::invalid_argument("partial_fractions: numerator degree not below denominator");

    PFDecomposition pf;
    pf.family = f;
    pf.n = n;
    pf.e = e;
    pf.A.assign(static_cast<std::size_t>(n + 1), {});

    for (long j = 0; j <= n; ++j) {
        // Around the pole k = -j, with t = k + j: summand = g(t) / t^e and
        // A_{j,s} is the coefficient of t^(e-s) in g.
        IntPolynomial shifted = sp.numerator.shifted(Int(-j));
        Series num(len, Rat(0));
        for (std::size_t m = 0; m < len && m < shifted.coefficients().size(); ++m)
            num[m] = Rat(shifted[m]) * sp.prefactor;

        Series den(len, Rat(0));
        den[0] = 1;
        for (long i = 0; i <= n; ++i) {
            if (i == j) continue;
            Int c(i - j);
            Series fac(len, Rat(0));
            for (std::size_t m = 0; m < len; ++m)
                fac[m] = Rat(binomial(static_cast<unsigned long>(e), m) *
                             pow_int(c, static_cast<unsigned long>(e) - m));
            den = mul_trunc(den, fac, len);
        }

        Series g = mul_trunc(num, invert_trunc(den, len), len);
        for (int s = 1; s <= e; ++s)
            pf.A[static_cast<std::size_t>(j)][static_cast<std::size_t>(s - 1)] =
                g[static_cast<std::size_t>(e - s)];
    }
    return pf;
}

LinearFormCoeffs linear_form_coeffs(const PFDecomposition& pf) {
    auto must_vanish = [&](int s) {
        if (pf.column_sum(s) != 0)
            throw std::logic_error(std::string("linear-form structure violated: zeta(") +
                                   std::to_string(s) + ") survives in " +
                                   family_name(pf.family) + " at n = " + std::to_string(pf.n));
    };

    LinearFormCoeffs lf;
    lf.family = pf.family;
    lf.n = pf.n;
    if (pf.e == 6) {
        must_vanish(1);
        must_vanish(2);
        must_vanish(4);
        must_vanish(6);
        lf.u = pf.column_sum(5);
        lf.w = pf.column_sum(3);
    } else {
        must_vanish(1);
        lf.u = pf.column_sum(3);
        lf.w = pf.column_sum(2);
    }

    // Rational part from the shift identity sum_{k>=1} (k+j)^(-s) = zeta(s) - H_{j,s};
    // harmonic numbers H_{j,s} accumulate as j ascends, H_{0,s} = 0.
    Rat v(0);
    std::array<Rat, 6> harmonic{};
    for (std::size_t j = 0; j < pf.A.size(); ++j) {
        if (j > 0)
            for (int s = 1; s <= pf.e; ++s)
                harmonic[static_cast<std::size_t>(s - 1)] +=
                    make_rat(Int(1), pow_int(Int(j), static_cast<unsigned long>(s)));
        for (int s = 1; s <= pf.e; ++s)
            v += pf.A[j][static_cast<std::size_t>(s - 1)] * harmonic[static_cast<std::size_t>(s - 1)];
    }
    lf.v = v;
    return lf;
}

LinearFormCoeffs linear_form_coeffs(Family f, long n) {
    return linear_form_coeffs(partial_fractions(f, n));
}

std::array<Rat, 3> cross_products(long n) {
    LinearFormCoeffs a = linear_form_coeffs(Family::R5, n);
    LinearFormCoeffs b = linear_form_coeffs(Family::R5Tilde, n);
    return {a.u * b.w - b.u * a.w, b.w * a.v - a.w * b.v, a.u * b.v - b.u * a.v};
}

std::array<Rat, 3> cross_products23(long n) {
    LinearFormCoeffs a = linear_form_coeffs(Family::R23, n);
    LinearFormCoeffs b = linear_form_coeffs(Family::R23Tilde, n);
    // Determinants oriented so that q'_0 = +1 with the series-evaluated
    // r'_0 = -zeta(3), r~'_0 = +zeta(2).
    return {b.u * a.w - a.u * b.w, a.w * b.v - b.w * a.v, b.u * a.v - a.u * b.v};
}

VerificationReport structure_check(long n_max) {
    VerificationReport rep;
    rep.check = "wp-structure";
    rep.range_lo = 0;
    rep.range_hi = n_max;
    for (long n = 0; n <= n_max && rep.passed(); ++n) {
        for (Family f : {Family::R5, Family::R5Tilde, Family::R23, Family::R23Tilde}) {
            PFDecomposition pf = partial_fractions(f, n);
            auto check = [&](int s) {
                if (pf.column_sum(s) != 0)
                    rep.fail(n, std::string(family_name(f)) + ": zeta(" + std::to_string(s) +
                                    ") column sum nonzero");
            };
            if (pf.e == 6) {
                check(1);
                check(2);
                check(4);
                check(6);
            } else {
                check(1);
            }
        }
    }
    return rep;
}

VerificationReport wp_sign_check(long n_max) {
    VerificationReport rep;
    rep.check = "wp-signs";
    rep.range_lo = 1;
    rep.range_hi = n_max;
    for (long n = 1; n <= n_max && rep.passed(); ++n) {
        for (Family f : {Family::R5, Family::R5Tilde}) {
            LinearFormCoeffs lf = linear_form_coeffs(f, n);
            if (lf.u <= 0 || lf.w <= 0 || lf.v <= 0)
                rep.fail(n, std::string(family_name(f)) + ": coefficient row not positive");
        }
        if (!rep.passed()) break;
        // |r_n| shrinks roughly like 10^(-2.8 n); escalate until the sign
        // of the enclosure is certain.
        int want = 1;
        for (Family f : {Family::R5, Family::R5Tilde}) {
            long d = 3 * n + 15;
            Interval iv = series_enclosure(f, n, d);
            while (iv.sign() == 0 && d < 20000) {
                d *= 2;
                iv = series_enclosure(f, n, d);
            }
            if (iv.sign() == 0) {
                rep.status = VerificationReport::Status::Indeterminate;
                rep.counterexample =
                    "n=" + std::to_string(n) + ": series sign unresolved at precision budget";
                break;
            }
            if (iv.sign() != want)
                rep.fail(n, std::string(family_name(f)) + ": series value has wrong sign");
            want = -want;
        }
    }
    return rep;
}

VerificationReport wp_integrality_check(long n_max) {
    VerificationReport rep;
    rep.check = "wp-integrality";
    rep.range_lo = 1;
    rep.range_hi = n_max;
    Int d(1);
    for (long n = 1; n <= n_max && rep.passed(); ++n) {
        mpz_lcm_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
        for (Family f : {Family::R5, Family::R5Tilde}) {
            LinearFormCoeffs lf = linear_form_coeffs(f, n);
            if (!is_integer(Rat(2) * lf.u))
                rep.fail(n, std::string(family_name(f)) + ": 2 u_n not integral");
            else if (!is_integer(Rat(2) * Rat(pow_int(d, 2)) * lf.w))
                rep.fail(n, std::string(family_name(f)) + ": 2 D_n^2 w_n not integral");
            else if (!is_integer(Rat(2) * Rat(pow_int(d, 5)) * lf.v))
                rep.fail(n, std::string(family_name(f)) + ": 2 D_n^5 v_n not integral");
        }
    }
    return rep;
}

Interval series_enclosure(Family f, long n, long digits) {
    if (digits < 1) throw std::invalid_argument("series_enclosure: digits must be >= 1");
    const SummandSpec sp = build_summand(f, n);
    const PFDecomposition pf = partial_fractions(f, n);
    const int e = pf.e;
    const long deg = sp.numerator.degree();
    const long gap = static_cast<long>(e) * (n + 1) - deg - 1;  // >= 1 for all families
    const Rat target = pow10_neg(static_cast<unsigned long>(digits));
    const Rat abs_pref = rat_abs(sp.prefactor);

    Rat partial(0);
    long summed_to = 0;
    constexpr long kMaxK = 1l << 22;

    for (long K = 64; K <= kMaxK; K *= 2) {
        for (long k = summed_to + 1; k <= K; ++k) partial += summand_value(sp, k);
        summed_to = K;
        enforce_bit_cap(partial);

        // Direct majorant: |numerator(k)| <= B * k^deg for k >= K, so the
        // tail is below |pref| * B * K^(-gap) / gap by integral comparison.
        Rat bound(0);
        for (long m = 0; m <= deg; ++m)
            bound += make_rat(abs(sp.numerator[static_cast<std::size_t>(m)]),
                              pow_int(Int(K), static_cast<unsigned long>(deg - m)));
        Rat tb = abs_pref * bound / (Rat(gap) * Rat(pow_int(Int(K), static_cast<unsigned long>(gap))));
        Interval tail(-tb, tb);

        // Partial-fraction tail. The s = 1 layer telescopes exactly
        // (column sum is zero); each s >= 2 pole gets an integral sandwich.
        Interval pf_tail{Rat(0)};
        for (long j = 0; j <= n; ++j) {
            const auto& row = pf.A[static_cast<std::size_t>(j)];
            if (row[0] != 0) {
                Rat window(0);
                for (long m = K + 1; m <= K + j; ++m) window += make_rat(Int(1), Int(m));
                pf_tail = pf_tail - row[0] * window;
            }
            for (int s = 2; s <= e; ++s) {
                const Rat& a = row[static_cast<std::size_t>(s - 1)];
                if (a == 0) continue;
                Int first(K + j + 1);
                Rat integral =
                    make_rat(Int(1), Int(s - 1) * pow_int(first, static_cast<unsigned long>(s - 1)));
                Rat head = make_rat(Int(1), pow_int(first, static_cast<unsigned long>(s)));
                pf_tail = pf_tail + a * Interval(integral, integral + head);
            }
        }

        tail = tail.intersect(pf_tail);
        Interval enclosure(partial + tail.lo, partial + tail.hi);
        if (enclosure.width() <= target) return enclosure;
    }
    throw std::runtime_error("series_enclosure: precision budget exhausted");
}

}  // namespace apery
