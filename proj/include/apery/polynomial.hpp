#pragma once

#include "apery/bigint.hpp"
#include "apery/interval.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace apery {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// constant term first. The zero polynomial has an empty coefficient list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Int> constant_first) : coeffs_(constant_first) { trim(); }
    explicit IntPolynomial(std::vector<Int> constant_first) : coeffs_(std::move(constant_first)) {
        trim();
    }

    static IntPolynomial constant(Int c) { return IntPolynomial({std::move(c)}); }
    /// x + c
    static IntPolynomial linear(Int c) { return IntPolynomial({std::move(c), Int(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Int>& coefficients() const { return coeffs_; }
    const Int& operator[](std::size_t i) const { return coeffs_[i]; }
    const Int& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Interval eval(const Interval& x) const {
        Interval acc{Rat(0)};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + Rat(*it);
        return acc;
    }

    IntPolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Int> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Int(i);
        return IntPolynomial(std::move(d));
    }

    /// p(-x): flips the sign of odd-degree coefficients.
    IntPolynomial reflected() const {
        std::vector<Int> r = coeffs_;
        for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return IntPolynomial(std::move(r));
    }

    /// p(x + shift), by repeated synthetic division.
    IntPolynomial shifted(const Int& shift) const {
        std::vector<Int> c = coeffs_;
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            for (std::size_t j = c.size() - 1; j > i; --j) c[j - 1] += shift * c[j];
        return IntPolynomial(std::move(c));
    }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator-() const {
        std::vector<Int> r = coeffs_;
        for (auto& c : r) c = -c;
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator-(const IntPolynomial& o) const { return *this + (-o); }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Int> r(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator*(const Int& k) const {
        if (k == 0) return {};
        std::vector<Int> r = coeffs_;
        for (auto& c : r) c *= k;
        return IntPolynomial(std::move(r));
    }

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

/// Rational-coefficient polynomial, constant term first; just enough for
/// Euclidean remainder sequences (Sturm chains, squarefree checks).
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(const IntPolynomial& p) {
        coeffs_.reserve(p.coefficients().size());
        for (const auto& c : p.coefficients()) coeffs_.emplace_back(c);
    }
    explicit RatPolynomial(std::vector<Rat> constant_first) : coeffs_(std::move(constant_first)) {
        trim();
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& leading() const { return coeffs_.back(); }
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    RatPolynomial operator-() const {
        std::vector<Rat> r = coeffs_;
        for (auto& c : r) c = -c;
        return RatPolynomial(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RatPolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rat> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(Int(i));
        return RatPolynomial(std::move(d));
    }

    RatPolynomial remainder(const RatPolynomial& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rat> r = coeffs_;
        int dd = divisor.degree();
        while (static_cast<int>(r.size()) - 1 >= dd && !r.empty()) {
            if (r.back() == 0) {
                r.pop_back();
                continue;
            }
            Rat f = r.back() / divisor.leading();
            std::size_t off = r.size() - 1 - dd;
            for (int i = 0; i <= dd; ++i) r[off + i] -= f * divisor.coeffs_[i];
            r.pop_back();
        }
        return RatPolynomial(std::move(r));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

/// gcd degree of p and p' is 0 iff p is squarefree over Q.
inline bool is_squarefree(const IntPolynomial& p) {
    if (p.is_zero()) return false;
    RatPolynomial a(p), b = a.derivative();
    while (!b.is_zero()) {
        RatPolynomial r = a.remainder(b);
        a = b;
        b = r;
    }
    return a.degree() == 0;
}

}  // namespace apery
