#pragma once

#include "apery/bigint.hpp"

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apery {

/// Third-order linear recurrence with exact integer coefficient rules, in
/// the homogeneous convention
///   lead(n) * x_{n+1} + c0(n) * x_n + cm1(n) * x_{n-1} + cm2(n) * x_{n-2} = 0.
struct RecurrenceSystem {
    std::string name;
    std::function<Int(long)> lead;
    std::function<Int(long)> c0;
    std::function<Int(long)> cm1;
    std::function<Int(long)> cm2;
};

/// Simultaneous solution states at index n: states[i] = {x_{n-2}, x_{n-1}, x_n}.
struct SolutionTriple {
    long n = 2;
    std::vector<std::array<Rat, 3>> states;
};

inline SolutionTriple step(const RecurrenceSystem& sys, const SolutionTriple& s) {
    Int lead = sys.lead(s.n);
    if (lead == 0)
        throw std::runtime_error("recurrence '" + sys.name +
                                 "': leading coefficient vanishes at n = " + std::to_string(s.n));
    Int c0 = sys.c0(s.n), cm1 = sys.cm1(s.n), cm2 = sys.cm2(s.n);
    SolutionTriple out;
    out.n = s.n + 1;
    out.states.reserve(s.states.size());
    for (const auto& x : s.states) {
        Rat next = -(Rat(c0) * x[2] + Rat(cm1) * x[1] + Rat(cm2) * x[0]) / Rat(lead);
        enforce_bit_cap(next);
        out.states.push_back({x[1], x[2], next});
    }
    return out;
}

/// Advances in place up to index n_max (O(1) memory per solution).
inline void advance_to(const RecurrenceSystem& sys, SolutionTriple& s, long n_max) {
    while (s.n < n_max) s = step(sys, s);
}

/// All states from the initial index up to n_max inclusive.
inline std::vector<SolutionTriple> run(const RecurrenceSystem& sys, const SolutionTriple& initial,
                                       long n_max) {
    if (n_max < initial.n)
        throw std::invalid_argument("run: n_max precedes the initial index");
    std::vector<SolutionTriple> out;
    out.reserve(static_cast<std::size_t>(n_max - initial.n) + 1);
    out.push_back(initial);
    while (out.back().n < n_max) out.push_back(step(sys, out.back()));
    return out;
}

}  // namespace apery
