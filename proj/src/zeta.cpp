#include "apery/zeta.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace apery {

Int lcm_upto(long n) {
    if (n < 1) throw std::invalid_argument("lcm_upto: n must be >= 1");
    Int d = 1;
    for (long k = 2; k <= n; ++k)
        mpz_lcm_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k));
    return d;
}

namespace {

// Tangent numbers T_1..T_n (Brent-Harvey triangle); B_{2m} is recovered as
// (-1)^(m-1) * 2m * T_m / (4^m (4^m - 1)). Integer-only, much cheaper than
// the defining binomial recurrence at the orders the zeta oracle needs.
std::vector<Int> tangent_numbers(std::size_t n) {
    std::vector<Int> t(n + 1);
    t[1] = 1;
    for (std::size_t k = 2; k <= n; ++k) t[k] = Int(k - 1) * t[k - 1];
    for (std::size_t k = 2; k <= n; ++k)
        for (std::size_t j = k; j <= n; ++j)
            t[j] = Int(j - k) * t[j - 1] + Int(j - k + 2) * t[j];
    return t;
}

std::mutex g_bernoulli_mutex;
std::vector<Rat> g_bernoulli_even;  // g_bernoulli_even[m] = B_{2m}

Rat bernoulli_even(std::size_t m) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (m < g_bernoulli_even.size()) return g_bernoulli_even[m];
    std::size_t upto = std::max<std::size_t>(m + 8, g_bernoulli_even.size() * 2);
    auto t = tangent_numbers(upto);
    g_bernoulli_even.assign(upto + 1, Rat(0));
    g_bernoulli_even[0] = 1;
    for (std::size_t i = 1; i <= upto; ++i) {
        Int four_i = pow_int(Int(4), i);
        Rat b = make_rat(Int(2 * i) * t[i], four_i * (four_i - 1));
        g_bernoulli_even[i] = (i % 2 == 1) ? b : -b;
    }
    return g_bernoulli_even[m];
}

Rat power_sum(long s, unsigned long a, unsigned long b) {
    // sum_{k=a}^{b-1} k^(-s), pairwise tree to keep denominators interleaved
    if (b - a <= 8) {
        Rat acc(0);
        for (unsigned long k = a; k < b; ++k)
            acc += make_rat(Int(1), pow_int(Int(k), static_cast<unsigned long>(s)));
        return acc;
    }
    unsigned long mid = a + (b - a) / 2;
    return power_sum(s, a, mid) + power_sum(s, mid, b);
}

struct PartialSumCache {
    unsigned long upto = 1;  // sum covers k in [1, upto)
    Rat sum{0};
};

std::mutex g_zeta_mutex;
std::map<long, PartialSumCache> g_partial_sums;
std::map<long, Interval> g_best_enclosure;

Rat partial_sum(long s, unsigned long K) {
    std::lock_guard<std::mutex> lock(g_zeta_mutex);
    auto& c = g_partial_sums[s];
    if (c.upto < K) {
        c.sum += power_sum(s, c.upto, K);
        c.upto = K;
        enforce_bit_cap(c.sum);
    }
    if (c.upto == K) return c.sum;
    return power_sum(s, 1, K);  // older, larger cache entry not reusable downward
}

}  // namespace

Rat bernoulli(long m) {
    if (m < 0) throw std::invalid_argument("bernoulli: negative index");
    if (m % 2 != 0) throw std::invalid_argument("bernoulli: odd index rejected");
    return bernoulli_even(static_cast<std::size_t>(m / 2));
}

Interval zeta_enclosure(long s, long digits) {
    if (s <= 1) throw std::invalid_argument("zeta_enclosure: s must be >= 2");
    if (digits < 1) throw std::invalid_argument("zeta_enclosure: digits must be >= 1");

    const Rat target = pow10_neg(static_cast<unsigned long>(digits + 2));
    constexpr unsigned long kMaxK = 1ul << 22;

    // The smallest reachable correction term at summation cutoff K is about
    // 10^(-2.7 K); starting near digits/2 skips doomed small-K passes.
    unsigned long K0 = 64;
    while (K0 < kMaxK && K0 * 2 < static_cast<unsigned long>(digits)) K0 *= 2;

    for (unsigned long K = K0; K <= kMaxK; K *= 2) {
        Int Kz(static_cast<long>(K));
        Rat sum = partial_sum(s, K);  // k = 1 .. K-1
        sum += make_rat(Int(1), Int(s - 1) * pow_int(Kz, static_cast<unsigned long>(s - 1)));
        sum += make_rat(Int(1), Int(2) * pow_int(Kz, static_cast<unsigned long>(s)));

        // Correction terms B_{2m}/(2m)! * (s)_{2m-1} * K^{-(s+2m-1)}, m = 1..
        // The remainder after stopping is bounded by the first omitted term.
        Rat kpow = make_rat(Int(1), pow_int(Kz, static_cast<unsigned long>(s + 1)));
        const Rat kstep = make_rat(Int(1), Kz * Kz);
        Int poch(s);       // (s)_{2m-1}
        Int fact(2);       // (2m)!
        Rat prev_abs(-1);  // sentinel
        for (long m = 1; m <= 200000; ++m) {
            if (m > 1) {
                poch *= Int(s + 2 * m - 3) * Int(s + 2 * m - 2);
                fact *= Int(2 * m - 1) * Int(2 * m);
                kpow *= kstep;
            }
            Rat term = bernoulli(2 * m) / Rat(fact) * Rat(poch) * kpow;
            Rat aterm = rat_abs(term);
            if (aterm < target) {
                Interval iv(sum - aterm, sum + aterm);
                std::lock_guard<std::mutex> lock(g_zeta_mutex);
                auto it = g_best_enclosure.find(s);
                if (it != g_best_enclosure.end()) iv = iv.intersect(it->second);
                g_best_enclosure[s] = iv;
                return iv;
            }
            if (prev_abs >= 0 && aterm >= prev_abs) break;  // diverging; need larger K
            sum += term;
            prev_abs = aterm;
            enforce_bit_cap(sum);
        }
    }
    throw std::runtime_error("zeta_enclosure: precision budget exhausted");
}

}  // namespace apery
