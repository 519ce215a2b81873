#include "verifier/cartan.hpp"

#include <cmath>
#include <stdexcept>

#include "verifier/jacobi.hpp"

namespace hv {

namespace {

SparsePoly qvar(const char* n) { return SparsePoly::variable(n); }
QuadExt rat(long n, long d = 1) { return QuadExt(BigRational(n, d)); }
QuadExt s3(long n, long d = 1) { return QuadExt(BigRational(0), BigRational(n, d)); }

}  // namespace

const SparsePoly& cartan_cubic() {
    static const SparsePoly p = [] {
        SparsePoly x1 = qvar("x1"), x2 = qvar("x2");
        SparsePoly z1 = qvar("z1"), z2 = qvar("z2"), z3 = qvar("z3");
        SparsePoly quad = z1 * z1 + z2 * z2 - rat(2) * z3 * z3 - rat(2) * x2 * x2;
        SparsePoly skew = x2 * z1 * z1 - x2 * z2 * z2 + rat(2) * z1 * z2 * z3;
        return x1.pow(3) + rat(3, 2) * x1 * quad + s3(3, 2) * skew;
    }();
    return p;
}

Mat5Poly so3_generator(int which) {
    if (which < 0 || which > 2) throw std::invalid_argument("generator index out of range");
    SparsePoly c = qvar("c"), s = qvar("s");
    SparsePoly zero, one = SparsePoly::constant(1L);
    // 3x3 rotation about the chosen axis
    std::array<std::array<SparsePoly, 3>, 3> rot;
    for (auto& row : rot)
        for (auto& e : row) e = zero;
    int i = (which + 1) % 3, j = (which + 2) % 3;
    rot[which][which] = one;
    rot[i][i] = c;
    rot[j][j] = c;
    rot[i][j] = -s;
    rot[j][i] = s;

    // symbolic T(x), conjugate, read coordinates back off
    using Mat3Poly = Eigen::Matrix<SparsePoly, 3, 3>;
    Mat3Poly t;
    {
        Eigen::Matrix<SparsePoly, 5, 1> x;
        for (int k = 0; k < 5; ++k) x(k) = qvar(coord_names()[static_cast<std::size_t>(k)].c_str());
        t = sym3<SparsePoly>(x, SparsePoly::constant(QuadExt::sqrt3()));
    }
    Mat3Poly a;
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k) a(r, k) = rot[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
    Mat3Poly conj = a * t * a.transpose();
    Eigen::Matrix<SparsePoly, 5, 1> img =
        sym3_coords<SparsePoly>(conj, SparsePoly::constant(QuadExt::sqrt3()));

    Mat5Poly out;
    for (int r = 0; r < 5; ++r) {
        for (int k = 0; k < 5; ++k) {
            // coefficient of coordinate k in row r
            SparsePoly entry = img(r);
            for (int m = 0; m < 5; ++m) {
                const std::string& name = coord_names()[static_cast<std::size_t>(m)];
                entry = entry.eval_partial({{name, m == k ? rat(1) : rat(0)}});
            }
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = entry;
        }
    }
    return out;
}

Eigen::Matrix<double, 5, 5> induced5(const Eigen::Matrix<double, 3, 3>& rot) {
    const double r3 = 1.7320508075688772;
    Eigen::Matrix<double, 5, 5> o;
    for (int k = 0; k < 5; ++k) {
        Eigen::Matrix<double, 5, 1> e = Eigen::Matrix<double, 5, 1>::Zero();
        e(k) = 1.0;
        Eigen::Matrix<double, 3, 3> t = sym3<double>(e, r3);
        Eigen::Matrix<double, 3, 3> c = rot * t * rot.transpose();
        o.col(k) = sym3_coords<double>(c, r3);
    }
    return o;
}

InvarianceReport check_invariance() {
    InvarianceReport rep{true, {false, false, false}};
    const SparsePoly& p5 = cartan_cubic();
    SparsePoly c = qvar("c");
    SparsePoly unit = SparsePoly::constant(1L) - c * c;  // s^2 rewrites to this
    for (int g = 0; g < 3; ++g) {
        Mat5Poly o = so3_generator(g);
        // rename coordinates to stand-ins, then substitute the rotated forms
        SparsePoly composed = p5;
        for (int k = 0; k < 5; ++k) {
            composed = composed.subs(coord_names()[static_cast<std::size_t>(k)],
                                     qvar(("t" + std::to_string(k)).c_str()));
        }
        for (int k = 0; k < 5; ++k) {
            SparsePoly row;
            for (int m = 0; m < 5; ++m)
                row += o[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] *
                       qvar(coord_names()[static_cast<std::size_t>(m)].c_str());
            composed = composed.subs("t" + std::to_string(k), row);
        }
        SparsePoly diff = (composed - p5).reduce_square("s", unit);
        bool ok = diff.is_zero();
        rep.per_generator[static_cast<std::size_t>(g)] = ok;
        rep.ok = rep.ok && ok;
    }
    return rep;
}

NormalForm reduce_to_normal_form(const Eigen::Matrix<double, 5, 1>& x) {
    double norm = x.norm();
    if (!(norm > 0.0)) throw std::invalid_argument("cannot reduce the zero vector");
    Eigen::Matrix<double, 5, 1> u = x / norm;
    const double r3 = 1.7320508075688772;

    auto [w, evec] = jacobi_eigen<3>(sym3<double>(u, r3));
    if (evec.determinant() < 0.0) evec.col(2) = -evec.col(2);

    double p = std::min(1.0, std::max(-1.0, w(1)));
    double q = std::sqrt(std::max(0.0, 1.0 - p * p));

    Eigen::Matrix<double, 3, 3> target = Eigen::Matrix<double, 3, 3>::Zero();
    target(0, 0) = p;
    target(1, 1) = p;
    target(2, 2) = -2.0 * p;
    target(0, 2) = target(2, 0) = -r3 * q;
    auto [tw, tvec] = jacobi_eigen<3>(target);
    if (tvec.determinant() < 0.0) tvec.col(2) = -tvec.col(2);

    Eigen::Matrix<double, 3, 3> rot = tvec * evec.transpose();
    NormalForm nf;
    nf.p = p;
    nf.q = q;
    nf.norm = norm;
    nf.O = induced5(rot);
    Eigen::Matrix<double, 5, 1> mapped = nf.O * u;
    Eigen::Matrix<double, 5, 1> section;
    section << p, 0.0, q, 0.0, 0.0;
    nf.residual = (mapped - section).norm();
    return nf;
}

BigRational section_value(const BigRational& p) {
    return (BigRational(3) * p - p.pow(3)) / BigRational(2);
}

}  // namespace hv
