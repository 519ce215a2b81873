#include "verifier/bernstein.hpp"

#include <algorithm>
#include <stdexcept>

namespace hv {

Tensor Tensor::from_poly(const SparsePoly& f, const std::vector<std::string>& order) {
    if (!f.rational_coeffs())
        throw std::invalid_argument("tensor conversion requires rational coefficients");
    Tensor t;
    t.deg_.assign(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) t.deg_[i] = f.degree(order[i]);
    SparsePoly used = f.trimmed();
    for (const auto& v : used.vars())
        if (std::find(order.begin(), order.end(), v) == order.end())
            throw std::invalid_argument("tensor order is missing variable " + v);

    t.stride_.assign(order.size(), 1);
    std::size_t total = 1;
    for (std::size_t i = order.size(); i-- > 0;) {
        t.stride_[i] = total;
        total *= t.deg_[i] + 1;
    }
    t.a_.assign(total, BigRational(0));

    // map f's variable slots onto the requested axis order
    const auto& vars = f.vars();
    std::vector<std::size_t> axis_of(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = std::find(order.begin(), order.end(), vars[i]);
        axis_of[i] = it == order.end() ? order.size() : static_cast<std::size_t>(it - order.begin());
    }
    for (const auto& [e, c] : f.terms()) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (axis_of[i] == order.size())
                throw std::invalid_argument("tensor order is missing a used variable");
            idx += t.stride_[axis_of[i]] * e[i];
        }
        t.a_[idx] = c.a;
    }
    return t;
}

void Tensor::line_apply(std::size_t axis,
                        const std::function<void(std::vector<BigRational>&)>& fn) {
    std::size_t n = deg_[axis] + 1;
    std::size_t stride = stride_[axis];
    std::size_t total = a_.size();
    std::vector<BigRational> line(n);
    std::size_t block = stride * n;
    for (std::size_t base = 0; base < total; base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            for (std::size_t i = 0; i < n; ++i) line[i] = a_[base + off + i * stride];
            fn(line);
            for (std::size_t i = 0; i < n; ++i) a_[base + off + i * stride] = line[i];
        }
    }
}

void Tensor::shift_axis(std::size_t axis, const BigRational& s) {
    if (s.is_zero()) return;
    std::size_t n = deg_[axis];
    line_apply(axis, [&](std::vector<BigRational>& a) {
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = n - 1; i + 1 > k; --i) a[i] += s * a[i + 1];
    });
}

void Tensor::scale_axis(std::size_t axis, const BigRational& w) {
    line_apply(axis, [&](std::vector<BigRational>& a) {
        BigRational p(1);
        for (std::size_t i = 1; i < a.size(); ++i) {
            p *= w;
            a[i] *= p;
        }
    });
}

void Tensor::restrict_to(const Box& box) {
    if (box.dim() != deg_.size()) throw std::invalid_argument("box dimension mismatch");
    for (std::size_t axis = 0; axis < deg_.size(); ++axis) {
        shift_axis(axis, box.side[axis].first);
        scale_axis(axis, box.side[axis].second - box.side[axis].first);
    }
}

void Tensor::to_bernstein() {
    for (std::size_t axis = 0; axis < deg_.size(); ++axis) {
        std::size_t n = deg_[axis];
        // binomial table C(k, i) up to k = n
        std::vector<std::vector<BigRational>> C(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            C[k].assign(k + 1, BigRational(1));
            for (std::size_t i = 1; i < k; ++i) C[k][i] = C[k - 1][i - 1] + C[k - 1][i];
        }
        line_apply(axis, [&](std::vector<BigRational>& a) {
            std::vector<BigRational> b(n + 1, BigRational(0));
            for (std::size_t j = 0; j <= n; ++j)
                for (std::size_t i = 0; i <= j; ++i) b[j] += (C[j][i] / C[n][i]) * a[i];
            a = std::move(b);
        });
    }
}

std::pair<BigRational, BigRational> Tensor::minmax() const {
    BigRational lo = a_[0], hi = a_[0];
    for (const auto& x : a_) {
        if (x < lo) lo = x;
        if (hi < x) hi = x;
    }
    return {lo, hi};
}

BigRational Tensor::corner(const std::vector<bool>& upper) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < deg_.size(); ++i)
        if (upper[i]) idx += stride_[i] * deg_[i];
    return a_[idx];
}

Tensor Tensor::split_half(std::size_t axis, bool upper) const {
    Tensor t = *this;
    std::size_t n = deg_[axis];
    BigRational half(1, 2);
    t.line_apply(axis, [&](std::vector<BigRational>& a) {
        std::vector<BigRational> keep(n + 1);
        keep[upper ? n : 0] = a[upper ? n : 0];
        for (std::size_t r = 1; r <= n; ++r) {
            for (std::size_t i = 0; i + r <= n; ++i) a[i] = (a[i] + a[i + 1]) * half;
            keep[upper ? n - r : r] = a[upper ? n - r : r];
        }
        a = std::move(keep);
    });
    return t;
}

std::pair<BigRational, BigRational> bernstein_bounds(const SparsePoly& f, const Box& box,
                                                     const std::vector<std::string>& order) {
    Tensor t = Tensor::from_poly(f, order);
    t.restrict_to(box);
    t.to_bernstein();
    return t.minmax();
}

Interval centered_bound(const SparsePoly& f, const Box& box,
                        const std::vector<std::string>& order) {
    if (order.size() != box.dim())
        throw std::invalid_argument("centered_bound: order/box dimension mismatch");
    SparsePoly g = f;
    for (std::size_t i = 0; i < order.size(); ++i) {
        SparsePoly repl = SparsePoly::variable(order[i]) + SparsePoly::constant(box.mid(i));
        g = g.subs(order[i], repl);
    }
    // half-widths indexed by g's own (sorted) variable slots
    std::vector<BigRational> h;
    for (const auto& v : g.vars()) {
        auto it = std::find(order.begin(), order.end(), v);
        if (it == order.end())
            throw std::invalid_argument("centered_bound: order is missing variable " + v);
        std::size_t axis = static_cast<std::size_t>(it - order.begin());
        h.push_back((box.side[axis].second - box.side[axis].first) / BigRational(2));
    }
    Interval center(BigRational(0));
    BigRational spread(0);
    for (const auto& [e, c] : g.terms()) {
        bool constant_term = true;
        for (unsigned k : e)
            if (k > 0) constant_term = false;
        if (constant_term) {
            center = enclose(c);
            continue;
        }
        Interval mag = enclose(c);
        BigRational amp = std::max(mag.hi.abs(), mag.lo.abs());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) amp *= h[i].pow(e[i]);
        spread += amp;
    }
    return Interval(center.lo - spread, center.hi + spread);
}

}  // namespace hv
