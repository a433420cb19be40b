#pragma once

#include "apery/interval.hpp"
#include "apery/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace apery {

struct NotSquarefreeError : std::invalid_argument {
    NotSquarefreeError() : std::invalid_argument("polynomial is not squarefree over Q") {}
};

/// Enclosures of all real roots of a squarefree integer polynomial, one
/// interval per root, pairwise disjoint, ascending, each of width
/// <= 10^(-digits). Roots are bracketed inside the Cauchy bound by Sturm
/// sign-change counting and refined by exact rational bisection.
std::vector<Interval> isolate_real_roots(const IntPolynomial& p, long digits);

/// Enclosure of sqrt(v), v >= 0, of width <= 10^(-digits), by bisection.
Interval sqrt_enclosure(const Rat& v, long digits);

/// Enclosure of sqrt over an interval of nonnegative values.
Interval sqrt_enclosure(const Interval& v, long digits);

}  // namespace apery
