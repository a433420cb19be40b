#pragma once

#include "apery/bigint.hpp"
#include "apery/interval.hpp"

#include <cmath>
#include <string>

namespace apery {

/// Fixed-point rendering with `digits` fractional digits, truncated toward
/// zero (reference tables elsewhere in the suite are truncations, not
/// roundings, so rendering must match).
inline std::string to_decimal(const Rat& x, int digits) {
    if (digits < 0) throw std::invalid_argument("to_decimal: negative digit count");
    Int n = x.get_num(), d = x.get_den();
    bool neg = n < 0;
    if (neg) n = -n;
    Int ip = n / d;
    Int frac = ((n % d) * pow10_int(static_cast<unsigned long>(digits))) / d;
    std::string s = ip.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        s += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return (neg && (ip != 0 || frac != 0)) ? "-" + s : s;
}

namespace detail {
/// Smallest power of ten >= width, rendered as a decimal string.
inline std::string residual_string(const Rat& width) {
    if (width == 0) return "0";
    int k = 0;
    Rat p(1);
    if (width <= 1) {
        while (p / 10 >= width) {
            p /= 10;
            ++k;
        }
        if (k == 0) return "1";
        return "0." + std::string(static_cast<std::size_t>(k) - 1, '0') + "1";
    }
    while (p < width) p *= 10;
    return p.get_str();
}
}  // namespace detail

/// Renders only the digits shared by both endpoints, then an explicit
/// "±<power of ten>" residual when the endpoints disagree within `digits`.
inline std::string to_decimal(const Interval& iv, int digits) {
    std::string lo = to_decimal(iv.lo, digits);
    std::string hi = to_decimal(iv.hi, digits);
    if (lo == hi) return lo;
    std::size_t i = 0;
    while (i < lo.size() && i < hi.size() && lo[i] == hi[i]) ++i;
    std::string common = lo.substr(0, i);
    if (!common.empty() && common.back() == '.') common.pop_back();
    std::string res = detail::residual_string(iv.width());
    if (common.empty() || common == "-") return to_decimal(iv.mid(), digits) + "±" + res;
    return common + "±" + res;
}

/// Decimal exponent e and mantissa m (1 <= m < 10) with |x| = m * 10^e.
/// The mantissa is a 16-digit truncation; only used for diagnostics (logs),
/// never in the exact core.
struct DecimalMagnitude {
    bool zero = true;
    long exp10 = 0;
    double mantissa = 0.0;
};

inline DecimalMagnitude decimal_magnitude(const Rat& x) {
    DecimalMagnitude m;
    if (x == 0) return m;
    m.zero = false;
    Int n(abs(x.get_num())), d(x.get_den());
    long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
    Rat ax = rat_abs(x);
    auto pow10r = [](long k) {
        return k >= 0 ? Rat(pow10_int(static_cast<unsigned long>(k)))
                      : pow10_neg(static_cast<unsigned long>(-k));
    };
    while (ax < pow10r(e)) --e;
    while (ax >= pow10r(e + 1)) ++e;
    Int scaled(ax * pow10r(15 - e));  // floor(|x| * 10^(15-e)), 16 digits
    m.exp10 = e;
    m.mantissa = scaled.get_d() / 1e15;
    return m;
}

/// Natural log of |x| via exponent extraction (digit count + leading
/// digits); the huge rational itself is never converted to floating point.
inline double log_abs(const Rat& x) {
    DecimalMagnitude m = decimal_magnitude(x);
    if (m.zero) throw std::domain_error("log_abs(0)");
    return static_cast<double>(m.exp10) * std::log(10.0) + std::log(m.mantissa);
}

inline double log10_abs(const Rat& x) { return log_abs(x) / std::log(10.0); }

}  // namespace apery
