#include "apery/zeta5.hpp"

#include "apery/decimal.hpp"
#include "apery/enclose.hpp"
#include "apery/roots.hpp"
#include "apery/series.hpp"
#include "apery/zeta.hpp"

#include <algorithm>
#include <stdexcept>

namespace apery::zeta5 {

const IntPolynomial& a_poly(int i) {
    static const IntPolynomial a0({-2871, 20010, -48459, 41218});
    static const IntPolynomial a1 = IntPolynomial({-60291, -271701, 460056, 3790503, 1311365,
                                                   -19538418, -24317344, 36002654, 89030880,
                                                   48802112}) *
                                    Int(2);
    static const IntPolynomial a2({-44541, 170716, 115771, -1182926, 647130, 2947148, -3144314,
                                   -2617900, 3874492});
    switch (i) {
        case 0: return a0;
        case 1: return a1;
        case 2: return a2;
    }
    throw std::invalid_argument("a_poly: index must be 0, 1 or 2");
}

Int coeff_a(int i, const Int& n) { return a_poly(i).eval(n); }

RecurrenceSystem system() {
    RecurrenceSystem sys;
    sys.name = "zeta5";
    sys.lead = [](long n) -> Int { return pow_int(Int(n + 1), 6) * coeff_a(0, Int(n)); };
    sys.c0 = [](long n) -> Int { return coeff_a(1, Int(n)); };
    sys.cm1 = [](long n) -> Int { return Int(-4) * Int(2 * n - 1) * coeff_a(2, Int(n)); };
    sys.cm2 = [](long n) -> Int {
        return Int(-4) * pow_int(Int(n - 1), 4) * Int(2 * n - 1) * Int(2 * n - 3) *
               coeff_a(0, Int(n + 1));
    };
    return sys;
}

SolutionTriple initial_state() {
    SolutionTriple s;
    s.n = 2;
    s.states = {{Rat(-1), Rat(42), Rat(-17934)},
                {Rat(0), Rat(87, 2), Rat(-1190161, 64)},
                {Rat(0), Rat(101, 2), Rat(-344923, 16)}};
    return s;
}

Sequences sequences(long n_max) {
    if (n_max < 2) throw std::invalid_argument("sequences: n_max must be >= 2");
    Sequences out;
    out.q.reserve(n_max + 1);
    out.p.reserve(n_max + 1);
    out.pt.reserve(n_max + 1);
    RecurrenceSystem sys = system();
    SolutionTriple s = initial_state();
    auto take = [&](const SolutionTriple& st, int slot) {
        const Rat& q = st.states[0][slot];
        if (!is_integer(q))
            throw std::logic_error("zeta5 sequences: q_n not integral at n = " +
                                   std::to_string(st.n - 2 + slot));
        out.q.push_back(Int(q.get_num()));
        out.p.push_back(st.states[1][slot]);
        out.pt.push_back(st.states[2][slot]);
    };
    take(s, 0);
    take(s, 1);
    take(s, 2);
    while (s.n < n_max) {
        s = step(sys, s);
        take(s, 2);
    }
    return out;
}

namespace {

// Digits the zeta(5)/zeta(3) oracle should start from when certifying at
// index n: the form shrinks like 10^(-0.472 n) while q_n grows like
// 10^(3.375 n), so the absolute width must beat both combined.
long digits_hint(long n) { return static_cast<long>(3.85 * static_cast<double>(n)) + 20; }

}  // namespace

Approximation approximation(long n) {
    if (n < 0) throw std::invalid_argument("approximation: n must be >= 0");
    Sequences s = sequences(std::max(n, 2l));
    if (s.q[n] == 0) throw std::logic_error("approximation: q_n = 0");
    Approximation a;
    a.fraction = s.p[n] / Rat(s.q[n]);
    for (long d = digits_hint(n);; d *= 2) {
        Interval err = (zeta_enclosure(5, d) - a.fraction).abs();
        if (err.hi == 0 || err.width() * 100 <= err.hi) {
            a.error = err;
            return a;
        }
    }
}

std::vector<LinearFormValue> linear_forms(long n_max) {
    Sequences s = sequences(std::max(n_max, 2l));
    std::vector<LinearFormValue> out;
    out.reserve(n_max + 1);
    for (long n = 0; n <= n_max; ++n) {
        LinearFormValue v;
        v.n = n;
        Rat q(s.q[n]);
        if (n == 0) {
            // l_0 = -zeta(5), l~_0 = -zeta(3): sign-resolution suffices
            v.l = zeta_enclosure(5, 12) * q - s.p[n];
            v.lt = zeta_enclosure(3, 12) * q - s.pt[n];
        } else {
            v.l = linear_form_enclosure(q, s.p[n], 5, digits_hint(n));
            v.lt = linear_form_enclosure(q, s.pt[n], 3, digits_hint(n));
        }
        out.push_back(std::move(v));
    }
    return out;
}

CharacteristicRootsMu char_roots_mu(long digits) {
    static const IntPolynomial chi({-16, -752, 2368, 1});
    auto roots = isolate_real_roots(chi, digits);
    if (roots.size() != 3) throw std::logic_error("char_roots_mu: expected three real roots");
    std::sort(roots.begin(), roots.end(), [](const Interval& a, const Interval& b) {
        return rat_abs(a.mid()) < rat_abs(b.mid());
    });
    return {roots[0], roots[1], roots[2]};
}

RateReport rate_report(long n) {
    if (n < 1) throw std::invalid_argument("rate_report: n must be >= 1");
    Sequences s = sequences(std::max(n, 2l));
    RateReport r;
    r.n = n;
    r.log_q = log_abs(Rat(s.q[n])) / n;
    r.log_p = log_abs(s.p[n]) / n;
    r.log_pt = log_abs(s.pt[n]) / n;
    if (auto l = linear_form_enclosure(Rat(s.q[n]), s.p[n], 5, digits_hint(n), 4))
        r.log_l = log_abs(l->mid()) / n;
    if (auto lt = linear_form_enclosure(Rat(s.q[n]), s.pt[n], 3, digits_hint(n), 4))
        r.log_lt = log_abs(lt->mid()) / n;
    CharacteristicRootsMu mu = char_roots_mu(16);
    r.target_forms = log_abs(mu.mu2.mid());
    r.target_coeffs = log_abs(mu.mu3.mid());
    return r;
}

VerificationReport integrality_check(long n_max) {
    if (n_max < 1) throw std::invalid_argument("integrality_check: n_max must be >= 1");
    VerificationReport rep;
    rep.check = "zeta5-integrality";
    rep.range_lo = 1;
    rep.range_hi = n_max;
    Sequences s = sequences(std::max(n_max, 2l));
    Int d(1);
    for (long n = 1; n <= n_max; ++n) {
        mpz_lcm_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
        Rat p_scaled = Rat(2) * Rat(pow_int(d, 5)) * s.p[n];
        Rat pt_scaled = Rat(2) * Rat(pow_int(d, 3)) * s.pt[n];
        if (!is_integer(p_scaled)) {
            rep.fail(n, "2 D_n^5 p_n has denominator " + p_scaled.get_den().get_str());
            break;
        }
        if (!is_integer(pt_scaled)) {
            rep.fail(n, "2 D_n^3 p~_n has denominator " + pt_scaled.get_den().get_str());
            break;
        }
    }
    return rep;
}

VerificationReport alternation_check(long n_max) {
    VerificationReport rep;
    rep.check = "zeta5-alternation";
    rep.range_lo = 1;
    rep.range_hi = n_max;
    Sequences s = sequences(std::max(n_max, 2l));
    for (long n = 1; n <= n_max; ++n) {
        int want = (n % 2 == 1) ? 1 : -1;
        if (sgn(s.q[n]) != want) rep.fail(n, "q_n breaks sign alternation");
        if (sgn(s.p[n]) != want) rep.fail(n, "p_n breaks sign alternation");
        if (sgn(s.pt[n]) != want) rep.fail(n, "p~_n breaks sign alternation");
        if (!rep.passed()) break;
    }
    return rep;
}

VerificationReport sign_check(long n_max) {
    VerificationReport rep;
    rep.check = "zeta5-form-signs";
    rep.range_lo = 1;
    rep.range_hi = n_max;
    auto forms = linear_forms(n_max);
    for (long n = 1; n <= n_max; ++n) {
        const auto& v = forms[n];
        if (!v.l || !v.lt) {
            rep.status = VerificationReport::Status::Indeterminate;
            rep.counterexample = "n=" + std::to_string(n) + ": sign unresolved at precision budget";
            break;
        }
        if (v.l->sign() != 1) rep.fail(n, "l_n not certified positive");
        if (v.lt->sign() != -1) rep.fail(n, "l~_n not certified negative");
        if (!rep.passed()) break;
    }
    return rep;
}

VerificationReport oracle_check(long n_max) {
    VerificationReport rep;
    rep.check = "zeta5-oracle";
    rep.range_lo = 0;
    rep.range_hi = n_max;
    Sequences s = sequences(std::max(n_max, 2l));
    for (long n = 0; n <= n_max && rep.passed(); ++n) {
        auto [q, p, pt] = cross_products(n);
        if (q != Rat(s.q[n])) rep.fail(n, "q cross product mismatch");
        else if (p != s.p[n]) rep.fail(n, "p cross product mismatch");
        else if (pt != s.pt[n]) rep.fail(n, "p~ cross product mismatch");
    }
    return rep;
}

const std::vector<TableRow>& reference_table() {
    static const std::vector<TableRow> table = [] {
        auto frac = [](const char* p, const char* q) { return Rat(Int(p), Int(q)); };
        std::vector<TableRow> t;
        t.push_back({0, Rat(0), make_rat(Int(1036927755), pow10_int(9)), std::nullopt});
        t.push_back({1, frac("29", "28"), make_rat(Int(1213469), pow10_int(9)), std::nullopt});
        t.push_back({2, frac("24289", "23424"), make_rat(Int(182), pow10_int(9)), std::nullopt});
        t.push_back({3, frac("7682021239", "7408444032"), std::nullopt,
                     make_rat(Int(280), pow10_int(13))});
        t.push_back({4, frac("24943788950905", "24055474286592"), std::nullopt,
                     make_rat(Int(413), pow10_int(17))});
        t.push_back({5, frac("81875586674776013003", "78959779279372800000"), std::nullopt,
                     make_rat(Int(602), pow10_int(21))});
        t.push_back({6, frac("282653756112686336975107", "272587704119854963200000"), std::nullopt,
                     make_rat(Int(871), pow10_int(25))});
        t.push_back({7,
                     frac("215903781003833520407770175189", "208214873150908926517286400000"),
                     std::nullopt, make_rat(Int(126), pow10_int(28))});
        t.push_back({10, std::nullopt, std::nullopt, make_rat(Int(371), pow10_int(40))});
        t.push_back({20, std::nullopt, std::nullopt, make_rat(Int(132), pow10_int(78))});
        t.push_back({50, std::nullopt, std::nullopt, make_rat(Int(552), pow10_int(194))});
        return t;
    }();
    return table;
}

}  // namespace apery::zeta5
