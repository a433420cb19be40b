#include "apery/zeta23.hpp"

#include "apery/decimal.hpp"
#include "apery/enclose.hpp"
#include "apery/roots.hpp"
#include "apery/series.hpp"
#include "apery/zeta.hpp"

#include <stdexcept>

namespace apery::zeta23 {

const IntPolynomial& a_poly(int i) {
    static const IntPolynomial a0({153, -731, 946});
    static const IntPolynomial a1 =
        IntPolynomial({1071, 3298, -8482, -34525, 12788, 127710, 104060}) * Int(2);
    static const IntPolynomial a2({-184, 328, 853, -1925, -1032, 3784});
    switch (i) {
        case 0: return a0;
        case 1: return a1;
        case 2: return a2;
    }
    throw std::invalid_argument("zeta23 a_poly: index must be 0, 1 or 2");
}

Int coeff_a(int i, const Int& n) { return a_poly(i).eval(n); }

RecurrenceSystem system() {
    RecurrenceSystem sys;
    sys.name = "zeta23";
    sys.lead = [](long n) -> Int { return pow_int(Int(n + 1), 4) * coeff_a(0, Int(n)); };
    sys.c0 = [](long n) -> Int { return -coeff_a(1, Int(n)); };
    sys.cm1 = [](long n) -> Int { return Int(4) * Int(2 * n - 1) * coeff_a(2, Int(n)); };
    sys.cm2 = [](long n) -> Int {
        return Int(-4) * pow_int(Int(n - 1), 2) * Int(2 * n - 1) * Int(2 * n - 3) *
               coeff_a(0, Int(n + 1));
    };
    return sys;
}

SolutionTriple initial_state() {
    SolutionTriple s;
    s.n = 2;
    s.states = {{Rat(1), Rat(14), Rat(978)},
                {Rat(0), Rat(17), Rat(9405, 8)},
                {Rat(0), Rat(23), Rat(6435, 4)}};
    return s;
}

Sequences sequences(long n_max) {
    if (n_max < 2) throw std::invalid_argument("sequences: n_max must be >= 2");
    Sequences out;
    RecurrenceSystem sys = system();
    SolutionTriple s = initial_state();
    auto take = [&](const SolutionTriple& st, int slot) {
        const Rat& q = st.states[0][slot];
        if (!is_integer(q))
            throw std::logic_error("zeta23 sequences: q'_n not integral at n = " +
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

CharacteristicRootsMuPrime char_roots_mu_prime(long digits) {
    static const IntPolynomial chi({-16, 32, -220, 1});
    auto roots = isolate_real_roots(chi, digits + 4);
    if (roots.size() != 1)
        throw std::logic_error("char_roots_mu_prime: expected exactly one real root");
    CharacteristicRootsMuPrime r;
    r.mu3 = roots[0];
    r.pair_modulus = sqrt_enclosure(Interval(Rat(16)) / r.mu3, digits);
    return r;
}

namespace {
long digits_hint(long n) { return static_cast<long>(3.0 * static_cast<double>(n)) + 20; }
}  // namespace

RateReport rate_report(long n) {
    if (n < 1) throw std::invalid_argument("rate_report: n must be >= 1");
    Sequences s = sequences(std::max(n, 2l));
    RateReport r;
    r.n = n;
    r.log_q = log_abs(Rat(s.q[n])) / n;
    r.log_p = log_abs(s.p[n]) / n;
    r.log_pt = log_abs(s.pt[n]) / n;
    if (auto l = linear_form_enclosure(Rat(s.q[n]), s.p[n], 3, digits_hint(n), 4))
        r.log_l = log_abs(l->mid()) / n;
    if (auto lt = linear_form_enclosure(Rat(s.q[n]), s.pt[n], 2, digits_hint(n), 4))
        r.log_lt = log_abs(lt->mid()) / n;
    CharacteristicRootsMuPrime mu = char_roots_mu_prime(16);
    r.target_forms = log_abs(mu.pair_modulus.mid());
    r.target_coeffs = log_abs(mu.mu3.mid());
    return r;
}

VerificationReport integrality_check(long n_max) {
    if (n_max < 1) throw std::invalid_argument("integrality_check: n_max must be >= 1");
    VerificationReport rep;
    rep.check = "zeta23-integrality";
    rep.range_lo = 1;
    rep.range_hi = n_max;
    Sequences s = sequences(std::max(n_max, 2l));
    Int d(1);
    for (long n = 1; n <= n_max; ++n) {
        mpz_lcm_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
        if (!is_integer(Rat(pow_int(d, 3)) * s.p[n])) {
            rep.fail(n, "D_n^3 p'_n not integral");
            break;
        }
        if (!is_integer(Rat(pow_int(d, 2)) * s.pt[n])) {
            rep.fail(n, "D_n^2 p~'_n not integral");
            break;
        }
    }
    return rep;
}

VerificationReport positivity_check(long n_max) {
    VerificationReport rep;
    rep.check = "zeta23-positivity";
    rep.range_lo = 1;
    rep.range_hi = n_max;
    Sequences s = sequences(std::max(n_max, 2l));
    for (long n = 1; n <= n_max && rep.passed(); ++n) {
        if (s.q[n] <= 0) rep.fail(n, "q'_n not positive");
        if (s.p[n] <= 0) rep.fail(n, "p'_n not positive");
        if (s.pt[n] <= 0) rep.fail(n, "p~'_n not positive");
    }
    return rep;
}

VerificationReport oracle_check(long n_max) {
    VerificationReport rep;
    rep.check = "zeta23-oracle";
    rep.range_lo = 0;
    rep.range_hi = n_max;
    Sequences s = sequences(std::max(n_max, 2l));
    for (long n = 0; n <= n_max && rep.passed(); ++n) {
        auto [q, p, pt] = cross_products23(n);
        if (q != Rat(s.q[n])) rep.fail(n, "q' cross product mismatch");
        else if (p != s.p[n]) rep.fail(n, "p' cross product mismatch");
        else if (pt != s.pt[n]) rep.fail(n, "p~' cross product mismatch");
    }
    return rep;
}

}  // namespace apery::zeta23
