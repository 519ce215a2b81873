#include "verifier/hessian.hpp"

namespace hv {

Eigen::Matrix<double, 5, 5> hessian_at(const Eigen::Matrix<double, 5, 1>& x, double delta) {
    double rho = x.squaredNorm();
    Eigen::Matrix<double, 5, 5> h =
        hessian_polynomial_part<double>(x, delta, 1.7320508075688772);
    return std::pow(rho, (-(1.0 + delta) - 4.0) / 2.0) * h;
}

SparsePoly trace_identity_residual() {
    Eigen::Matrix<SparsePoly, 5, 1> x;
    for (int i = 0; i < 5; ++i) x(i) = SparsePoly::variable(coord_names()[static_cast<std::size_t>(i)]);
    SparsePoly d = SparsePoly::variable("delta");
    Eigen::Matrix<SparsePoly, 5, 5> h =
        hessian_polynomial_part<SparsePoly>(x, d, SparsePoly::constant(QuadExt::sqrt3()));
    SparsePoly tr;
    for (int i = 0; i < 5; ++i) tr += h(i, i);

    SparsePoly rho;
    for (int i = 0; i < 5; ++i) rho += x(i) * x(i);
    SparsePoly pref = (d + 1) * (d - 8);  // -(1+delta)(8-delta)
    return tr - pref * cartan_cubic() * rho;
}

Eigen::Matrix<SparsePoly, 5, 5> section_hessian() {
    Eigen::Matrix<SparsePoly, 5, 1> x;
    x(0) = SparsePoly::variable("p");
    x(1) = SparsePoly();
    x(2) = SparsePoly::variable("q");
    x(3) = SparsePoly();
    x(4) = SparsePoly();
    SparsePoly d = SparsePoly::variable("delta");
    return hessian_polynomial_part<SparsePoly>(x, d, SparsePoly::constant(QuadExt::sqrt3()));
}

}  // namespace hv
