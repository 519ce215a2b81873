#pragma once

#include <stdexcept>
#include <string>

#include "verifier/rational.hpp"

namespace hv {

/**
 * Element a + b*sqrt(3) of the real quadratic field Q(sqrt(3)).
 * Exact field arithmetic; ordering decided by exact sign tests.
 */
struct QuadExt {
    BigRational a;
    BigRational b;

    QuadExt() = default;
    QuadExt(BigRational ra) : a(std::move(ra)) {}
    QuadExt(long n) : a(n) {}
    QuadExt(BigRational ra, BigRational rb) : a(std::move(ra)), b(std::move(rb)) {}

    static QuadExt sqrt3() { return QuadExt(BigRational(0), BigRational(1)); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }

    QuadExt operator-() const { return QuadExt(-a, -b); }
    QuadExt& operator+=(const QuadExt& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& o) {
        BigRational na = a * o.a + BigRational(3) * b * o.b;
        BigRational nb = a * o.b + b * o.a;
        a = std::move(na);
        b = std::move(nb);
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) {
        // multiply by conjugate; norm a^2 - 3 b^2 vanishes only at zero
        BigRational n = o.a * o.a - BigRational(3) * o.b * o.b;
        if (n.is_zero()) throw std::domain_error("quadext division by zero");
        QuadExt conj(o.a / n, -o.b / n);
        return *this *= conj;
    }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// Exact sign of a + b*sqrt(3).
    int sign() const {
        int sa = a.sign(), sb = b.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: |a| vs sqrt(3)|b| decided by squares
        int cmp = (a * a < BigRational(3) * b * b) ? -1 : (a * a == BigRational(3) * b * b ? 0 : 1);
        // cmp compares |a| with sqrt(3)|b|; the larger magnitude wins
        if (cmp == 0) return 0;  // impossible: sqrt(3) irrational, kept for clarity
        return cmp > 0 ? sa : sb;
    }

    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }

    double to_double() const { return a.to_double() + b.to_double() * 1.7320508075688772; }

    std::string str() const {
        if (b.is_zero()) return a.str();
        std::string s = a.is_zero() ? "" : a.str();
        if (!s.empty()) s += "+";
        return s + "(" + b.str() + ")r3";
    }
};

}  // namespace hv
