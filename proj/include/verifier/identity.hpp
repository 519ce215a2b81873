#pragma once

#include <array>

#include "verifier/spectrum.hpp"

namespace hv {

/// Elementary symmetric functions E1..E5 of the section eigenvalues as
/// polynomials in (p, delta), read off the characteristic polynomial.
const std::array<SparsePoly, 5>& elementary_symmetric();

/**
 * The eigenvalue constraint: E5 is a fixed linear combination of
 * E1^5, E1^3 E2 and E1 E4 whose coefficients depend only on delta,
 *
 *   den * E5 = num[0] * E1^5 + num[1] * E1^3 E2 + num[2] * E1 E4.
 *
 * The symbolic fit solves a 3x3 system over Q[delta] and then verifies the
 * identity over the full polynomial ring; it throws if anything fails.
 */
struct SymbolicFit {
    SparsePoly den;                  // delta only
    std::array<SparsePoly, 3> num;   // coefficients of E1^5, E1^3 E2, E1 E4
};
const SymbolicFit& fit_identity_symbolic();

/// Per-delta exact fit: solves the same system with rational arithmetic and
/// reports whether the residual vanishes for every power of p.
struct FitAt {
    std::array<BigRational, 3> c;   // c5, c3, c1
    bool exact;
};
FitAt fit_identity_at(const BigRational& delta);

/**
 * Scaled gradient of the constraint along each eigenvalue slot, cleared of
 * denominators. On the two quadratic slots the gradient lives in a
 * one-radical extension and is reported as A + B sqrt(rad); the rational
 * slot gives a plain polynomial. All entries have vars (p, delta); the
 * radicands are slot_disc1() / slot_disc2().
 */
struct GradientPolys {
    SparsePoly g1A, g1B;   // along Q1+, radical sqrt(disc1)
    SparsePoly g2A, g2B;   // along Q2+, radical sqrt(disc2)
    SparsePoly g3;         // along R
};
const GradientPolys& gradient_polys();

}  // namespace hv
