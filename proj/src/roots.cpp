#include "apery/roots.hpp"

#include <algorithm>

namespace apery {

namespace {

std::vector<RatPolynomial> sturm_chain(const IntPolynomial& p) {
    std::vector<RatPolynomial> chain;
    chain.emplace_back(p);
    chain.push_back(chain[0].derivative());
    while (!chain.back().is_zero()) {
        RatPolynomial r = chain[chain.size() - 2].remainder(chain.back());
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sign_variations(const std::vector<RatPolynomial>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        int s = sign_of(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Cauchy bound: all real roots lie in (-B, B).
Rat cauchy_bound(const IntPolynomial& p) {
    Rat m(0);
    for (const auto& c : p.coefficients()) {
        Rat a = rat_abs(Rat(c));
        if (a > m) m = a;
    }
    return Rat(1) + m / rat_abs(Rat(p.leading()));
}

// Splits (lo, hi] until each piece holds exactly one root (Sturm count).
void isolate(const std::vector<RatPolynomial>& chain, const Rat& lo, const Rat& hi, int vlo,
             int vhi, std::vector<Interval>& out) {
    int roots = vlo - vhi;
    if (roots <= 0) return;
    if (roots == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    Rat mid = (lo + hi) / 2;
    // A root exactly at a rational split point would leave the open piece
    // (lo, mid] miscounted only if p(mid) = 0; nudge until it is not.
    const RatPolynomial& p = chain.front();
    Rat step = (hi - lo) / 64;
    while (p.eval(mid) == 0) mid += step;
    int vmid = sign_variations(chain, mid);
    isolate(chain, lo, mid, vlo, vmid, out);
    isolate(chain, mid, hi, vmid, vhi, out);
}

}  // namespace

std::vector<Interval> isolate_real_roots(const IntPolynomial& p, long digits) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (digits < 1) throw std::invalid_argument("isolate_real_roots: digits must be >= 1");
    if (!is_squarefree(p)) throw NotSquarefreeError();

    auto chain = sturm_chain(p);
    Rat bound = cauchy_bound(p);
    std::vector<Interval> brackets;
    isolate(chain, -bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound),
            brackets);

    const Rat width_target = pow10_neg(static_cast<unsigned long>(digits));
    const RatPolynomial rp(p);
    std::vector<Interval> out;
    for (auto& b : brackets) {
        Rat lo = b.lo, hi = b.hi;
        // Simple root in (lo, hi]: p changes sign across it once endpoints
        // are non-roots, which the isolation step arranged for lo and which
        // a final exact hit on hi makes into a degenerate enclosure.
        if (rp.eval(hi) == 0) {
            out.emplace_back(hi, hi);
            continue;
        }
        int slo = sign_of(rp.eval(lo));
        while (hi - lo > width_target) {
            Rat mid = (lo + hi) / 2;
            Rat fm = rp.eval(mid);
            if (fm == 0) {
                lo = hi = mid;
                break;
            }
            if (sign_of(fm) == slo)
                lo = mid;
            else
                hi = mid;
        }
        out.emplace_back(lo, hi);
    }
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

Interval sqrt_enclosure(const Rat& v, long digits) {
    if (v < 0) throw std::domain_error("sqrt_enclosure: negative argument");
    if (v == 0) return Interval(Rat(0));
    Rat lo(0), hi = std::max(Rat(1), v);
    const Rat width_target = pow10_neg(static_cast<unsigned long>(digits));
    while (hi - lo > width_target) {
        Rat mid = (lo + hi) / 2;
        if (mid * mid <= v)
            lo = mid;
        else
            hi = mid;
    }
    return Interval(lo, hi);
}

Interval sqrt_enclosure(const Interval& v, long digits) {
    return Interval(sqrt_enclosure(v.lo, digits).lo, sqrt_enclosure(v.hi, digits).hi);
}

}  // namespace apery
