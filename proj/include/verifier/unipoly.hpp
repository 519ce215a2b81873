#pragma once

#include <string>
#include <vector>

#include "verifier/sparsepoly.hpp"

namespace hv {

/**
 * Polynomial viewed as univariate in a distinguished variable; coefficients
 * are SparsePoly in the remaining variables.
 */
struct UniPoly {
    std::string var;
    std::vector<SparsePoly> c;  // c[k] multiplies var^k; zero polynomial has empty c

    static UniPoly collect(const SparsePoly& f, const std::string& var);
    SparsePoly expand() const;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    void normalize();  // drop leading zero coefficients
};

/// Resultant with respect to the distinguished variable, fraction-free Bareiss
/// elimination of the Sylvester matrix. Both inputs must share the variable.
SparsePoly resultant(const UniPoly& f, const UniPoly& g);

/**
 * Dense univariate polynomial with exact rational coefficients, for root
 * isolation of specialized resultants.
 */
struct RatPoly {
    std::vector<BigRational> c;  // c[i] multiplies x^i

    int degree() const { return static_cast<int>(c.size()) - 1; }
    void normalize();
    bool is_zero() const { return c.empty(); }
    BigRational eval(const BigRational& x) const;
    RatPoly deriv() const;
    RatPoly monic() const;

    static RatPoly from_sparse(const SparsePoly& f);  // univariate, rational coeffs
};

RatPoly gcd(RatPoly a, RatPoly b);

/// A located real root: either exact, or an open isolating interval.
struct RootBracket {
    bool exact;
    BigRational value;  // the root when exact
    BigRational lo, hi;  // otherwise f(lo) f(hi) < 0 and the root is unique inside
};

/**
 * Isolate all real roots of f in [lo, hi]. Multiple roots are collapsed via
 * the squarefree part. Bisection continues until every bracket is narrower
 * than `width`.
 */
std::vector<RootBracket> isolate_roots(const RatPoly& f, const BigRational& lo,
                                       const BigRational& hi, const BigRational& width);

}  // namespace hv
