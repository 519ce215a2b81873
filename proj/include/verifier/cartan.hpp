#pragma once

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

#include "verifier/eigen_support.hpp"
#include "verifier/sparsepoly.hpp"

namespace hv {

/// 5x5 matrix of polynomials (used for one-angle symmetry generators).
using Mat5Poly = std::array<std::array<SparsePoly, 5>, 5>;

inline const std::vector<std::string>& coord_names() {
    static const std::vector<std::string> n{"x1", "x2", "z1", "z2", "z3"};
    return n;
}

/// The invariant cubic on R^5, coordinates (x1, x2, z1, z2, z3).
const SparsePoly& cartan_cubic();

/**
 * The cubic seen through traceless symmetric 3x3 matrices: sym3 maps x to a
 * matrix T with |T|^2 = 6|x|^2 and det T = -2 P(x); rotations act on T by
 * conjugation, which is what the generators below come from.
 */
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> sym3(const Eigen::Matrix<Scalar, 5, 1>& x, const Scalar& sqrt3) {
    Eigen::Matrix<Scalar, 3, 3> t;
    t(0, 0) = x(0) - sqrt3 * x(1);
    t(1, 1) = x(0) + sqrt3 * x(1);
    t(2, 2) = Scalar(-2) * x(0);
    t(0, 1) = t(1, 0) = -sqrt3 * x(4);
    t(0, 2) = t(2, 0) = -sqrt3 * x(2);
    t(1, 2) = t(2, 1) = -sqrt3 * x(3);
    return t;
}

/// Inverse of sym3 on its image.
template <typename Scalar>
Eigen::Matrix<Scalar, 5, 1> sym3_coords(const Eigen::Matrix<Scalar, 3, 3>& t,
                                        const Scalar& sqrt3) {
    Eigen::Matrix<Scalar, 5, 1> x;
    x(0) = t(2, 2) / Scalar(-2);
    x(1) = (t(1, 1) - t(0, 0)) / (Scalar(2) * sqrt3);
    x(2) = -t(0, 2) / sqrt3;
    x(3) = -t(1, 2) / sqrt3;
    x(4) = -t(0, 1) / sqrt3;
    return x;
}

/**
 * Induced 5x5 action of a one-angle rotation about coordinate axis
 * `which` (0, 1, 2). Entries are polynomials in c and s standing for the
 * cosine and sine of the angle.
 */
Mat5Poly so3_generator(int which);

/// Induced 5x5 orthogonal matrix of a concrete 3x3 rotation.
Eigen::Matrix<double, 5, 5> induced5(const Eigen::Matrix<double, 3, 3>& rot);

struct InvarianceReport {
    bool ok;
    std::array<bool, 3> per_generator;
};

/// P(A_i x) == P(x) exactly, modulo c^2 + s^2 = 1, for all three generators.
InvarianceReport check_invariance();

struct NormalForm {
    double p;
    double q;
    double norm;                    // |x| of the input
    Eigen::Matrix<double, 5, 5> O;  // O * (x/|x|) is approximately (p,0,q,0,0)
    double residual;                // | O u - (p,0,q,0,0) |
};

/**
 * Rotate a nonzero input onto the section (p, 0, q, 0, 0), q >= 0, |u| = 1.
 * p is the middle eigenvalue of sym3(x/|x|), which always lies in [-1, 1].
 */
NormalForm reduce_to_normal_form(const Eigen::Matrix<double, 5, 1>& x);

/// Exact value of the cubic on the section: (3p - p^3)/2 at p^2 + q^2 = 1.
BigRational section_value(const BigRational& p);

}  // namespace hv
