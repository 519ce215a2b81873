#pragma once

#include <array>
#include <string>
#include <vector>

#include "verifier/hessian.hpp"
#include "verifier/unipoly.hpp"

namespace hv {

/// Swap the two equivalent deformation parameters: delta = 1 - eps.
SparsePoly to_eps_convention(const SparsePoly& f);
SparsePoly to_delta_convention(const SparsePoly& f);

/// Closed forms for the five eigenvalue slots on the section, vars (p, delta).
/// The cubic block factors as (S - muR) * (S^2 + u1 S + v1), the quadratic
/// block is S^2 - trM2 S + detM2.  All five are runtime-verified against the
/// recomputed characteristic polynomial before first use.
const SparsePoly& slot_muR();
const SparsePoly& slot_u1();
const SparsePoly& slot_v1();
const SparsePoly& slot_trM2();
const SparsePoly& slot_detM2();
const SparsePoly& slot_disc1();  // u1^2 - 4 v1
const SparsePoly& slot_disc2();  // trM2^2 - 4 detM2, equals 27(4 - p^2)

struct NormalFormCharpoly {
    UniPoly three;                 // monic cubic in S, coefficients in (p, delta)
    UniPoly two;                   // monic quadratic in S
    std::array<SparsePoly, 5> a;   // full quintic = S^5 + a[0] S^4 + ... + a[4]
};

/// Characteristic polynomial of the section Hessian, split along the
/// invariant 3+2 block structure. Throws std::logic_error if the recomputed
/// blocks disagree with the closed-form slot factorization.
const NormalFormCharpoly& charpoly_normal_form();

/// Exact slot data at a rational section point.
/// Q1+- = q1_center +- sqrt(q1_radicand), Q2+- = q2_center +- sqrt(q2_radicand).
struct SlotValues {
    BigRational R;            // the rational slot
    BigRational q1_center;    // Q1+- = q1_center +- sqrt(q1_radicand)
    BigRational q1_radicand;
    BigRational q2_center;
    BigRational q2_radicand;
    double vR, q1p, q1m, q2p, q2m;
};
SlotValues slot_values(const BigRational& p, const BigRational& delta);

/// -1 for p < -p0, 0 for |p| < p0, +1 for p > p0, decided exactly through
/// the quartic p^4 (4 - eps^2) = 3 eps^2; boundary points go with sign(p).
int classify_region(const BigRational& p, const BigRational& delta);

struct OrderedSpectrum {
    std::array<double, 5> lam;          // descending
    std::array<std::string, 5> label;   // slot names "R", "Q1+", ...
    int region;
};
OrderedSpectrum ordered_spectrum(const BigRational& p, const BigRational& delta);

/// Resultants in p eliminating S between slot factors, vars (p, delta).
struct CrossingStructure {
    SparsePoly res_rq1;    // between S - muR and the Q1 quadratic
    SparsePoly res_rq2;    // between S - muR and the Q2 quadratic
    SparsePoly res_q1q2;   // between the two quadratics
};
const CrossingStructure& crossing_structure();

/// Isolated real roots of each resultant inside [-1, 1] at fixed delta.
struct CrossingScan {
    std::vector<RootBracket> rq1, rq2, q1q2;
};
CrossingScan scan_crossings(const BigRational& delta);

}  // namespace hv
