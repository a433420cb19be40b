#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace apery {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a big-number operand exceeds the configured bit cap
/// (APERY_ZETA_MAX_BITS). Mapped to exit code 3 by the CLI.
struct BitLimitError : std::runtime_error {
    explicit BitLimitError(std::size_t bits, std::size_t cap)
        : std::runtime_error("big-number size " + std::to_string(bits) +
                             " bits exceeds cap of " + std::to_string(cap)) {}
};

namespace detail {
inline std::atomic<std::size_t>& max_bits_slot() {
    static std::atomic<std::size_t> cap{0};  // 0 = unlimited
    return cap;
}
}  // namespace detail

inline void set_max_bits(std::size_t cap) { detail::max_bits_slot() = cap; }
inline std::size_t max_bits() { return detail::max_bits_slot(); }

inline void enforce_bit_cap(const Int& x) {
    std::size_t cap = max_bits();
    if (cap == 0) return;
    std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    if (bits > cap) throw BitLimitError(bits, cap);
}

inline void enforce_bit_cap(const Rat& x) {
    enforce_bit_cap(Int(x.get_num()));
    enforce_bit_cap(Int(x.get_den()));
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow10_int(unsigned long e) { return pow_int(Int(10), e); }

/// 10^(-e) as an exact rational.
inline Rat pow10_neg(unsigned long e) { return Rat(Int(1), pow10_int(e)); }

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

}  // namespace apery
