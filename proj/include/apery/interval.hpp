#pragma once

#include "apery/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace apery {

/// Exact rational enclosure [lo, hi]. Since the endpoints are exact,
/// arithmetic is outward-conservative by construction: the result interval
/// contains every pointwise result of operands drawn from the inputs.
struct Interval {
    Rat lo;
    Rat hi;

    Interval() : lo(0), hi(0) {}
    explicit Interval(Rat point) : lo(point), hi(std::move(point)) {}
    Interval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }

    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    /// +1 if certainly positive, -1 if certainly negative, 0 if the sign
    /// cannot be determined from this enclosure.
    int sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }

    Interval operator-() const { return Interval(-hi, -lo); }

    Interval operator+(const Interval& o) const { return Interval(lo + o.lo, hi + o.hi); }
    Interval operator-(const Interval& o) const { return Interval(lo - o.hi, hi - o.lo); }

    Interval operator*(const Interval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return Interval(std::min(std::min(a, b), std::min(c, d)),
                        std::max(std::max(a, b), std::max(c, d)));
    }

    Interval operator/(const Interval& o) const {
        if (o.contains_zero()) throw std::domain_error("Interval division by interval containing 0");
        return *this * Interval(Rat(1) / o.hi, Rat(1) / o.lo);
    }

    Interval operator+(const Rat& x) const { return Interval(lo + x, hi + x); }
    Interval operator-(const Rat& x) const { return Interval(lo - x, hi - x); }
    Interval operator*(const Rat& x) const {
        return x >= 0 ? Interval(lo * x, hi * x) : Interval(hi * x, lo * x);
    }

    /// |.| of the enclosure: encloses |x| for every x in the interval.
    Interval abs() const {
        if (lo >= 0) return *this;
        if (hi <= 0) return -*this;
        return Interval(Rat(0), std::max(Rat(-lo), hi));
    }

    /// Both inputs must enclose the same true value, so the intersection is
    /// nonempty and again an enclosure.
    Interval intersect(const Interval& o) const {
        Rat l = std::max(lo, o.lo), h = std::min(hi, o.hi);
        if (l > h) throw std::domain_error("Interval::intersect: disjoint enclosures");
        return Interval(l, h);
    }

    bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

inline Interval operator*(const Rat& x, const Interval& iv) { return iv * x; }

}  // namespace apery
