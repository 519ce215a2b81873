#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>

#include "verifier/cartan.hpp"
#include "verifier/eigen_support.hpp"
#include "verifier/sparsepoly.hpp"

namespace hv {

template <typename S>
S scalar_cast(const BigRational& r);
template <>
inline double scalar_cast<double>(const BigRational& r) {
    return r.to_double();
}
template <>
inline BigRational scalar_cast<BigRational>(const BigRational& r) {
    return r;
}
template <>
inline QuadExt scalar_cast<QuadExt>(const BigRational& r) {
    return QuadExt(r);
}
template <>
inline SparsePoly scalar_cast<SparsePoly>(const BigRational& r) {
    return SparsePoly::constant(r);
}

/// Evaluate a polynomial over any scalar; sqrt3val stands in for sqrt(3).
template <typename S>
S eval_poly(const SparsePoly& f, const std::map<std::string, S>& vals, const S& sqrt3val) {
    const auto& vars = f.vars();
    std::vector<const S*> bound(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = vals.find(vars[i]);
        if (it == vals.end()) throw std::invalid_argument("eval_poly: unbound " + vars[i]);
        bound[i] = &it->second;
    }
    S acc = S(0);
    for (const auto& [e, c] : f.terms()) {
        S t = scalar_cast<S>(c.a) + scalar_cast<S>(c.b) * sqrt3val;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t = t * (*bound[i]);
        acc = acc + t;
    }
    return acc;
}

/**
 * Polynomial part of the Hessian of w = P / |x|^(1+delta):
 *
 *   D^2 w = |x|^(c-4) * H,  c = -(1+delta),
 *   H = rho^2 D^2P + c rho (sym of gradP x^T) + c rho P I + c(c-2) P x x^T,
 *
 * with rho = |x|^2. On the unit sphere H is the Hessian itself.
 */
template <typename S>
Eigen::Matrix<S, 5, 5> hessian_polynomial_part(const Eigen::Matrix<S, 5, 1>& x, const S& delta,
                                               const S& sqrt3val) {
    static const SparsePoly& p5 = cartan_cubic();
    static const std::array<SparsePoly, 5> grad = [] {
        std::array<SparsePoly, 5> g;
        for (int i = 0; i < 5; ++i)
            g[static_cast<std::size_t>(i)] = cartan_cubic().deriv(coord_names()[static_cast<std::size_t>(i)]);
        return g;
    }();
    static const std::array<std::array<SparsePoly, 5>, 5> hess = [] {
        std::array<std::array<SparsePoly, 5>, 5> h;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    cartan_cubic()
                        .deriv(coord_names()[static_cast<std::size_t>(i)])
                        .deriv(coord_names()[static_cast<std::size_t>(j)]);
        return h;
    }();

    std::map<std::string, S> pt;
    for (int i = 0; i < 5; ++i) pt.emplace(coord_names()[static_cast<std::size_t>(i)], x(i));

    S rho = S(0);
    for (int i = 0; i < 5; ++i) rho = rho + x(i) * x(i);
    S c = S(0) - (S(1) + delta);
    S pval = eval_poly<S>(p5, pt, sqrt3val);
    Eigen::Matrix<S, 5, 1> g;
    for (int i = 0; i < 5; ++i) g(i) = eval_poly<S>(grad[static_cast<std::size_t>(i)], pt, sqrt3val);

    Eigen::Matrix<S, 5, 5> h;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            h(i, j) = eval_poly<S>(hess[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                   pt, sqrt3val);

    Eigen::Matrix<S, 5, 5> out = rho * rho * h;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            out(i, j) = out(i, j) + c * rho * (g(i) * x(j) + x(i) * g(j));
            if (i == j) out(i, j) = out(i, j) + c * rho * pval;
            out(i, j) = out(i, j) + c * (c - S(2)) * pval * x(i) * x(j);
        }
    return out;
}

/// Hessian at a point of the unit sphere, double precision.
Eigen::Matrix<double, 5, 5> hessian_at(const Eigen::Matrix<double, 5, 1>& x, double delta);

/**
 * The five-variable trace identity: trace of the polynomial Hessian part
 * equals -(1+delta)(8-delta) * P * rho, as polynomials in all coordinates
 * and delta. Returns the difference, which the engine requires to vanish.
 */
SparsePoly trace_identity_residual();

/// Exact symbolic Hessian on the section x = (p, 0, q, 0, 0), entries in (p, q, delta).
Eigen::Matrix<SparsePoly, 5, 5> section_hessian();

}  // namespace hv
