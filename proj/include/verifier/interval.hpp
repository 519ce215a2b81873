#pragma once

#include <algorithm>
#include <stdexcept>

#include "verifier/quadext.hpp"
#include "verifier/rational.hpp"

namespace hv {

/**
 * Closed interval with exact rational endpoints. All operations produce
 * enclosures; nothing here rounds.
 */
struct Interval {
    BigRational lo;
    BigRational hi;

    Interval() = default;
    Interval(BigRational point) : lo(point), hi(std::move(point)) {}
    Interval(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw std::invalid_argument("interval with hi < lo");
    }

    BigRational width() const { return hi - lo; }
    BigRational mid() const { return (lo + hi) / BigRational(2); }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool is_point() const { return lo == hi; }

    Interval operator-() const { return Interval(-hi, -lo); }
    friend Interval operator+(const Interval& x, const Interval& y) {
        return Interval(x.lo + y.lo, x.hi + y.hi);
    }
    friend Interval operator-(const Interval& x, const Interval& y) {
        return Interval(x.lo - y.hi, x.hi - y.lo);
    }
    friend Interval operator*(const Interval& x, const Interval& y) {
        BigRational p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
        BigRational lo = std::min(std::min(p1, p2), std::min(p3, p4));
        BigRational hi = std::max(std::max(p1, p2), std::max(p3, p4));
        return Interval(std::move(lo), std::move(hi));
    }

    Interval pow(unsigned e) const {
        if (e == 0) return Interval(BigRational(1));
        if (e % 2 == 1 || !contains_zero()) {
            BigRational a = lo.pow(e), b = hi.pow(e);
            if (a <= b) return Interval(a, b);
            return Interval(b, a);
        }
        // even power over an interval straddling zero
        return Interval(BigRational(0), std::max(lo.pow(e), hi.pow(e)));
    }

    friend Interval hull(const Interval& x, const Interval& y) {
        return Interval(std::min(x.lo, y.lo), std::max(x.hi, y.hi));
    }
};

/// Rational enclosure of sqrt(3) of width below 10^-30, computed once by bisection.
inline const Interval& sqrt3_enclosure() {
    static const Interval enc = [] {
        BigRational lo(1), hi(2), three(3), half(1, 2);
        BigRational target = BigRational(1, 10).pow(30);
        while (hi - lo > target) {
            BigRational m = (lo + hi) * half;
            if (m * m < three)
                lo = m;
            else
                hi = m;
        }
        return Interval(lo, hi);
    }();
    return enc;
}

/// Enclosure of a + b*sqrt(3).
inline Interval enclose(const QuadExt& q) {
    if (q.b.is_zero()) return Interval(q.a);
    const Interval& s3 = sqrt3_enclosure();
    return Interval(q.a) + Interval(q.b) * s3;
}

}  // namespace hv
