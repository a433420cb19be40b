#pragma once

#include "apery/bigint.hpp"
#include "apery/interval.hpp"

namespace apery {

/// D_n = lcm(1, 2, ..., n). Rejects n = 0.
Int lcm_upto(long n);

/// Exact Bernoulli number B_m for even m >= 0; odd indices are rejected.
Rat bernoulli(long m);

/// Rigorous enclosure of zeta(s) for integer s >= 2, of width <= 10^(-digits).
///
/// Euler-Maclaurin applied to the tail sum_{k>=K} k^(-s): the partial sum,
/// the integral and half-term corrections, and Bernoulli correction terms.
/// For f(x) = x^(-s) all derivatives have constant sign, so the remainder
/// after M terms is bounded in magnitude by the first omitted term; the
/// enclosure widens both endpoints by that term. K starts at 64 and doubles
/// whenever the Bernoulli terms stop shrinking before the target is met.
///
/// Successive calls for the same s return nested enclosures (results are
/// intersected with a per-s cache of the tightest enclosure seen so far).
Interval zeta_enclosure(long s, long digits);

}  // namespace apery
