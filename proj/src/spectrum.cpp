#include "verifier/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace hv {

namespace {

SparsePoly var_p() { return SparsePoly::variable("p"); }
SparsePoly var_d() { return SparsePoly::variable("delta"); }

BigRational half() { return BigRational(1, 2); }

SparsePoly swap_convention(const SparsePoly& f, const std::string& from, const std::string& to) {
    SparsePoly repl = SparsePoly(1) - SparsePoly::variable(to);
    return f.subs(from, repl).trimmed();
}

}  // namespace

SparsePoly to_eps_convention(const SparsePoly& f) { return swap_convention(f, "delta", "eps"); }
SparsePoly to_delta_convention(const SparsePoly& f) { return swap_convention(f, "eps", "delta"); }

const SparsePoly& slot_muR() {
    static const SparsePoly v = [] {
        SparsePoly p = var_p(), d = var_d();
        return QuadExt(half()) * (p * ((d + 1) * p.pow(2) + (SparsePoly(3) - SparsePoly(3) * d)));
    }();
    return v;
}

const SparsePoly& slot_u1() {
    static const SparsePoly v = [] {
        SparsePoly p = var_p(), d = var_d();
        return QuadExt(half()) * (p * (d - 5) * (d + 1) * (p.pow(2) - 3));
    }();
    return v;
}

const SparsePoly& slot_v1() {
    static const SparsePoly v = [] {
        SparsePoly p = var_p(), d = var_d();
        SparsePoly inner = (d - 5) * (d + 1) * p.pow(2) * (p.pow(2) - 3).pow(2) + SparsePoly(36) * (d - 1);
        return QuadExt(BigRational(1, 4)) * ((SparsePoly(1) - d) * inner);
    }();
    return v;
}

const SparsePoly& slot_trM2() {
    static const SparsePoly v = [] {
        SparsePoly p = var_p(), d = var_d();
        return p * ((d + 1) * p.pow(2) - SparsePoly(3) * d - 6);
    }();
    return v;
}

const SparsePoly& slot_detM2() {
    static const SparsePoly v = [] {
        SparsePoly p = var_p(), d = var_d();
        SparsePoly inner = d.pow(2) * p.pow(4) - SparsePoly(3) * d.pow(2) * p.pow(2) +
                           SparsePoly(2) * d * p.pow(4) - SparsePoly(12) * d * p.pow(2) + p.pow(4) -
                           SparsePoly(9) * p.pow(2) + 36;
        return QuadExt(BigRational(1, 4)) * ((p.pow(2) - 3) * inner);
    }();
    return v;
}

const SparsePoly& slot_disc1() {
    static const SparsePoly v = slot_u1().pow(2) - SparsePoly(4) * slot_v1();
    return v;
}

const SparsePoly& slot_disc2() {
    static const SparsePoly v = [] {
        SparsePoly v2 = slot_trM2().pow(2) - SparsePoly(4) * slot_detM2();
        SparsePoly closed = SparsePoly(27) * (SparsePoly(4) - var_p().pow(2));
        if (!(v2 - closed).is_zero()) throw std::logic_error("quadratic slot discriminant");
        return closed;
    }();
    return v;
}

const NormalFormCharpoly& charpoly_normal_form() {
    static const NormalFormCharpoly cp = [] {
        Eigen::Matrix<SparsePoly, 5, 5> h = section_hessian();
        SparsePoly one_m_p2 = SparsePoly(1) - var_p().pow(2);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                h(i, j) = h(i, j).reduce_square("q", one_m_p2);
                bool cross = (i < 3) != (j < 3);
                if (cross && !h(i, j).is_zero())
                    throw std::logic_error("section Hessian does not split 3+2");
            }

        SparsePoly S = SparsePoly::variable("S");
        auto minor2 = [&](int r0, int r1, int c0, int c1, auto& m) {
            return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        };
        Eigen::Matrix<SparsePoly, 5, 5> sm;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) sm(i, j) = (i == j) ? S - h(i, j) : -h(i, j);

        SparsePoly det3 = sm(0, 0) * minor2(1, 2, 1, 2, sm) - sm(0, 1) * minor2(1, 2, 0, 2, sm) +
                          sm(0, 2) * minor2(1, 2, 0, 1, sm);
        SparsePoly det2 = sm(3, 3) * sm(4, 4) - sm(3, 4) * sm(4, 3);
        det3 = det3.reduce_square("q", one_m_p2);
        det2 = det2.reduce_square("q", one_m_p2);
        if (det3.degree("q") > 0 || det2.degree("q") > 0)
            throw std::logic_error("block determinants not even in q");
        det3 = det3.trimmed();
        det2 = det2.trimmed();

        SparsePoly cubic_closed =
            (S - slot_muR()) * (S.pow(2) + slot_u1() * S + slot_v1());
        SparsePoly quad_closed = S.pow(2) - slot_trM2() * S + slot_detM2();
        if (!(det3 - cubic_closed).is_zero()) throw std::logic_error("cubic block mismatch");
        if (!(det2 - quad_closed).is_zero()) throw std::logic_error("quadratic block mismatch");

        NormalFormCharpoly out;
        out.three = UniPoly::collect(det3, "S");
        out.two = UniPoly::collect(det2, "S");
        UniPoly full = UniPoly::collect(det3 * det2, "S");
        if (full.degree() != 5 || !(full.c[5] - SparsePoly(1)).is_zero())
            throw std::logic_error("characteristic polynomial not monic quintic");
        for (int k = 1; k <= 5; ++k) out.a[static_cast<std::size_t>(k - 1)] = full.c[static_cast<std::size_t>(5 - k)];
        return out;
    }();
    return cp;
}

SlotValues slot_values(const BigRational& p, const BigRational& delta) {
    std::map<std::string, BigRational> at{{"p", p}, {"delta", delta}};
    auto ev = [&](const SparsePoly& f) { return eval_poly<BigRational>(f, at, BigRational(0)); };
    SlotValues s;
    s.R = ev(slot_muR());
    BigRational u1 = ev(slot_u1());
    s.q1_center = -u1 / BigRational(2);
    s.q1_radicand = ev(slot_disc1()) / BigRational(4);
    BigRational t2 = ev(slot_trM2());
    s.q2_center = t2 / BigRational(2);
    s.q2_radicand = ev(slot_disc2()) / BigRational(4);
    if (s.q1_radicand.sign() < 0 || s.q2_radicand.sign() < 0)
        throw std::logic_error("negative slot radicand");
    double r1 = std::sqrt(s.q1_radicand.to_double());
    double r2 = std::sqrt(s.q2_radicand.to_double());
    s.vR = s.R.to_double();
    s.q1p = s.q1_center.to_double() + r1;
    s.q1m = s.q1_center.to_double() - r1;
    s.q2p = s.q2_center.to_double() + r2;
    s.q2m = s.q2_center.to_double() - r2;
    return s;
}

int classify_region(const BigRational& p, const BigRational& delta) {
    BigRational eps = BigRational(1) - delta;
    BigRational lhs = p.pow(4) * (BigRational(4) - eps * eps);
    BigRational rhs = BigRational(3) * eps * eps;
    if (lhs < rhs) return 0;
    return p.sign() >= 0 ? 1 : -1;
}

OrderedSpectrum ordered_spectrum(const BigRational& p, const BigRational& delta) {
    static const std::array<std::array<const char*, 5>, 3> assembly = {{
        {"Q2+", "Q1+", "Q1-", "R", "Q2-"},   // p < -p0
        {"Q2+", "Q1+", "R", "Q1-", "Q2-"},   // |p| < p0
        {"Q2+", "R", "Q1+", "Q1-", "Q2-"},   // p > p0
    }};
    SlotValues s = slot_values(p, delta);
    OrderedSpectrum out;
    out.region = classify_region(p, delta);
    const auto& order = assembly[static_cast<std::size_t>(out.region + 1)];
    for (int i = 0; i < 5; ++i) {
        std::string lab = order[static_cast<std::size_t>(i)];
        double v = lab == "R"     ? s.vR
                   : lab == "Q1+" ? s.q1p
                   : lab == "Q1-" ? s.q1m
                   : lab == "Q2+" ? s.q2p
                                  : s.q2m;
        out.lam[static_cast<std::size_t>(i)] = v;
        out.label[static_cast<std::size_t>(i)] = lab;
    }
    return out;
}

const CrossingStructure& crossing_structure() {
    static const CrossingStructure cs = [] {
        SparsePoly S = SparsePoly::variable("S");
        UniPoly f1 = UniPoly::collect(S - slot_muR(), "S");
        UniPoly m1 = UniPoly::collect(S.pow(2) + slot_u1() * S + slot_v1(), "S");
        UniPoly m2 = UniPoly::collect(S.pow(2) - slot_trM2() * S + slot_detM2(), "S");
        CrossingStructure out;
        out.res_rq1 = resultant(f1, m1);
        out.res_rq2 = resultant(f1, m2);
        out.res_q1q2 = resultant(m1, m2);
        return out;
    }();
    return cs;
}

CrossingScan scan_crossings(const BigRational& delta) {
    auto specialize = [&](const SparsePoly& f) {
        SparsePoly g = f.eval_partial({{"delta", QuadExt(delta)}}).trimmed();
        return RatPoly::from_sparse(g);
    };
    const CrossingStructure& cs = crossing_structure();
    CrossingScan out;
    BigRational w(1, 1);
    for (int i = 0; i < 40; ++i) w = w / BigRational(2);
    out.rq1 = isolate_roots(specialize(cs.res_rq1), BigRational(-1), BigRational(1), w);
    out.rq2 = isolate_roots(specialize(cs.res_rq2), BigRational(-1), BigRational(1), w);
    out.q1q2 = isolate_roots(specialize(cs.res_q1q2), BigRational(-1), BigRational(1), w);
    return out;
}

}  // namespace hv
