#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "verifier/sparsepoly.hpp"

namespace hv {

/// Axis-aligned box with exact rational corners.
struct Box {
    std::vector<std::pair<BigRational, BigRational>> side;

    std::size_t dim() const { return side.size(); }
    BigRational mid(std::size_t axis) const {
        return (side[axis].first + side[axis].second) / BigRational(2);
    }
    Box half(std::size_t axis, bool upper) const {
        Box b = *this;
        BigRational m = mid(axis);
        (upper ? b.side[axis].first : b.side[axis].second) = m;
        return b;
    }
};

/**
 * Dense coefficient tensor of a polynomial in up to a few variables, used in
 * power basis for domain normalization and in Bernstein basis for bounds.
 * Degrees are fixed per axis; storage is row-major.
 */
class Tensor {
public:
    Tensor() = default;

    /// Dense power-basis coefficients of f with axes in the given variable order.
    static Tensor from_poly(const SparsePoly& f, const std::vector<std::string>& order);

    const std::vector<unsigned>& deg() const { return deg_; }
    const std::vector<BigRational>& coeffs() const { return a_; }

    /// x_axis -> x_axis + s
    void shift_axis(std::size_t axis, const BigRational& s);
    /// x_axis -> w * x_axis
    void scale_axis(std::size_t axis, const BigRational& w);
    /// Normalize from `box` onto [0,1]^k (power basis).
    void restrict_to(const Box& box);
    /// Convert every axis from power to Bernstein basis on [0,1].
    void to_bernstein();

    std::pair<BigRational, BigRational> minmax() const;
    /// Value at a corner of [0,1]^k (Bernstein basis: corner coefficients).
    BigRational corner(const std::vector<bool>& upper) const;

    /// de Casteljau subdivision at the axis midpoint (Bernstein basis).
    Tensor split_half(std::size_t axis, bool upper) const;

private:
    std::vector<unsigned> deg_;
    std::vector<std::size_t> stride_;
    std::vector<BigRational> a_;

    void line_apply(std::size_t axis, const std::function<void(std::vector<BigRational>&)>& fn);
};

/**
 * Bernstein coefficient range of f over the box; the true range is contained
 * in it and the bound is exact at the box corners.
 */
std::pair<BigRational, BigRational> bernstein_bounds(const SparsePoly& f, const Box& box,
                                                     const std::vector<std::string>& order);

/**
 * Centered-form enclosure of f over the box: f(mid) plus a remainder bounded
 * termwise after an exact Taylor shift to the midpoint. Box axes follow
 * `order`. Depends only on (f, box, order), which is what certificate replay
 * relies on.
 */
Interval centered_bound(const SparsePoly& f, const Box& box,
                        const std::vector<std::string>& order);

}  // namespace hv
