#include "verifier/identity.hpp"

#include <stdexcept>

namespace hv {

namespace {

struct Surd {
    SparsePoly a, b;  // a + b * sqrt(rad)
};

Surd smul(const Surd& x, const Surd& y, const SparsePoly& rad) {
    return {x.a * y.a + rad * (x.b * y.b), x.a * y.b + x.b * y.a};
}
Surd sadd(const Surd& x, const Surd& y) { return {x.a + y.a, x.b + y.b}; }
Surd ssub(const Surd& x, const Surd& y) { return {x.a - y.a, x.b - y.b}; }
Surd sscale(const SparsePoly& c, const Surd& x) { return {c * x.a, c * x.b}; }

std::array<SparsePoly, 3> fit_bases() {
    const auto& e = elementary_symmetric();
    return {e[0].pow(5), e[0].pow(3) * e[1], e[0] * e[3]};
}

SparsePoly det3(const std::array<std::array<SparsePoly, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Elementary symmetric functions of the four slots other than the chosen
/// one, read off the complementary quartic factor; index k-1 holds E_k.
std::array<Surd, 4> complement_elementary(const UniPoly& rational_quad_a,
                                          const UniPoly& rational_quad_b, const Surd& beta,
                                          const SparsePoly& rad) {
    UniPoly cubic;
    cubic.var = "S";
    cubic.c.assign(4, SparsePoly());
    for (std::size_t i = 0; i < rational_quad_a.c.size(); ++i)
        for (std::size_t j = 0; j < rational_quad_b.c.size(); ++j)
            cubic.c[i + j] += rational_quad_a.c[i] * rational_quad_b.c[j];

    // multiply by (S + beta)
    std::array<Surd, 5> q;
    for (auto& s : q) s = Surd{SparsePoly(), SparsePoly()};
    for (std::size_t k = 0; k < 4; ++k) {
        q[k + 1] = sadd(q[k + 1], Surd{cubic.c[k], SparsePoly()});
        q[k] = sadd(q[k], smul(Surd{cubic.c[k], SparsePoly()}, beta, rad));
    }
    std::array<Surd, 4> ek;
    for (int k = 1; k <= 4; ++k) {
        Surd v = q[static_cast<std::size_t>(4 - k)];
        if (k % 2 == 1) v = Surd{SparsePoly() - v.a, SparsePoly() - v.b};
        ek[static_cast<std::size_t>(k - 1)] = v;
    }
    return ek;
}

Surd constraint_gradient(const Surd& lambda, const std::array<Surd, 4>& comp,
                         const SparsePoly& rad, const SymbolicFit& fit) {
    const auto& e = elementary_symmetric();
    const SparsePoly& E1 = e[0];
    const SparsePoly& E2 = e[1];
    const SparsePoly& E4 = e[3];
    Surd acc = sscale(fit.den, comp[3]);  // den * E4 of the complement
    acc = ssub(acc, Surd{SparsePoly(5) * fit.num[0] * E1.pow(4), SparsePoly()});
    Surd e1_minus = ssub(Surd{E1, SparsePoly()}, lambda);
    Surd t3 = sadd(Surd{SparsePoly(3) * E1.pow(2) * E2, SparsePoly()},
                   smul(Surd{E1.pow(3), SparsePoly()}, e1_minus, rad));
    acc = ssub(acc, sscale(fit.num[1], t3));
    Surd t1 = sadd(Surd{E4, SparsePoly()}, sscale(E1, comp[2]));
    acc = ssub(acc, sscale(fit.num[2], t1));
    return acc;
}

}  // namespace

const std::array<SparsePoly, 5>& elementary_symmetric() {
    static const std::array<SparsePoly, 5> e = [] {
        const auto& cp = charpoly_normal_form();
        std::array<SparsePoly, 5> out;
        for (int k = 1; k <= 5; ++k) {
            SparsePoly v = cp.a[static_cast<std::size_t>(k - 1)];
            if (k % 2 == 1) v = SparsePoly() - v;
            out[static_cast<std::size_t>(k - 1)] = v;
        }
        return out;
    }();
    return e;
}

const SymbolicFit& fit_identity_symbolic() {
    static const SymbolicFit fit = [] {
        const auto& e = elementary_symmetric();
        auto bases = fit_bases();
        const SparsePoly& target = e[4];

        std::array<UniPoly, 3> bc;
        for (int i = 0; i < 3; ++i) bc[static_cast<std::size_t>(i)] = UniPoly::collect(bases[static_cast<std::size_t>(i)], "p");
        UniPoly tc = UniPoly::collect(target, "p");
        auto coeff = [](const UniPoly& u, std::size_t k) {
            return k < u.c.size() ? u.c[k] : SparsePoly();
        };

        std::vector<std::size_t> degs;
        for (std::size_t k = 16; k-- > 0;) degs.push_back(k);
        for (std::size_t i = 0; i < degs.size(); ++i)
            for (std::size_t j = i + 1; j < degs.size(); ++j)
                for (std::size_t k = j + 1; k < degs.size(); ++k) {
                    std::array<std::size_t, 3> rows{degs[i], degs[j], degs[k]};
                    std::array<std::array<SparsePoly, 3>, 3> m;
                    for (int r = 0; r < 3; ++r)
                        for (int c2 = 0; c2 < 3; ++c2)
                            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] =
                                coeff(bc[static_cast<std::size_t>(c2)], rows[static_cast<std::size_t>(r)]);
                    SparsePoly den = det3(m);
                    if (den.is_zero()) continue;
                    SymbolicFit out;
                    out.den = den;
                    for (int c2 = 0; c2 < 3; ++c2) {
                        auto mj = m;
                        for (int r = 0; r < 3; ++r)
                            mj[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] =
                                coeff(tc, rows[static_cast<std::size_t>(r)]);
                        out.num[static_cast<std::size_t>(c2)] = det3(mj);
                    }
                    SparsePoly resid = out.den * target;
                    for (int b2 = 0; b2 < 3; ++b2)
                        resid -= out.num[static_cast<std::size_t>(b2)] * bases[static_cast<std::size_t>(b2)];
                    if (!resid.is_zero()) throw std::logic_error("eigenvalue constraint fit residual");
                    return out;
                }
        throw std::logic_error("eigenvalue constraint fit singular");
    }();
    return fit;
}

FitAt fit_identity_at(const BigRational& delta) {
    const auto& e = elementary_symmetric();
    auto bases = fit_bases();
    auto specialize = [&](const SparsePoly& f) {
        return RatPoly::from_sparse(f.eval_partial({{"delta", QuadExt(delta)}}).trimmed());
    };
    std::array<RatPoly, 3> b{specialize(bases[0]), specialize(bases[1]), specialize(bases[2])};
    RatPoly t = specialize(e[4]);

    std::size_t ncols = 0;
    for (const auto& f : b) ncols = std::max(ncols, f.c.size());
    ncols = std::max(ncols, t.c.size());
    std::vector<std::array<BigRational, 4>> rows(ncols);
    for (std::size_t k = 0; k < ncols; ++k) {
        for (int j = 0; j < 3; ++j)
            rows[k][static_cast<std::size_t>(j)] =
                k < b[static_cast<std::size_t>(j)].c.size() ? b[static_cast<std::size_t>(j)].c[k] : BigRational(0);
        rows[k][3] = k < t.c.size() ? t.c[k] : BigRational(0);
    }

    // Gaussian elimination over Q on the overdetermined augmented system.
    std::size_t row = 0;
    std::array<std::size_t, 3> pivot_row{};
    int rank = 0;
    for (int col = 0; col < 3 && row < rows.size(); ++col) {
        std::size_t pr = row;
        while (pr < rows.size() && rows[pr][static_cast<std::size_t>(col)].is_zero()) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[row], rows[pr]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][static_cast<std::size_t>(col)].is_zero()) continue;
            BigRational f = rows[r][static_cast<std::size_t>(col)] / rows[row][static_cast<std::size_t>(col)];
            for (int c2 = col; c2 < 4; ++c2)
                rows[r][static_cast<std::size_t>(c2)] -= f * rows[row][static_cast<std::size_t>(c2)];
        }
        pivot_row[static_cast<std::size_t>(rank)] = row;
        ++rank;
        ++row;
    }
    FitAt out;
    out.exact = (rank == 3);
    for (std::size_t r = row; r < rows.size() && out.exact; ++r)
        if (!rows[r][3].is_zero()) out.exact = false;
    if (rank == 3) {
        int seen = 0;
        for (int col = 0; col < 3; ++col) {
            std::size_t r = pivot_row[static_cast<std::size_t>(seen)];
            out.c[static_cast<std::size_t>(col)] = rows[r][3] / rows[r][static_cast<std::size_t>(col)];
            ++seen;
        }
    }
    return out;
}

const GradientPolys& gradient_polys() {
    static const GradientPolys g = [] {
        const SymbolicFit& fit = fit_identity_symbolic();
        SparsePoly d = SparsePoly::variable("delta");
        SparsePoly S = SparsePoly::variable("S");
        SparsePoly eps = SparsePoly(1) - d;
        SparsePoly k1 = (SparsePoly(8) - d) * (d + 1) * (d.pow(2) - SparsePoly(2) * d + 4);

        UniPoly lin = UniPoly::collect(S - slot_muR(), "S");
        UniPoly m1 = UniPoly::collect(S.pow(2) + slot_u1() * S + slot_v1(), "S");
        UniPoly m2 = UniPoly::collect(S.pow(2) - slot_trM2() * S + slot_detM2(), "S");
        QuadExt half(BigRational(1, 2));

        GradientPolys out;
        {
            // Q1+ slot: lambda = -u1/2 + sqrt(disc1)/2
            const SparsePoly& rad = slot_disc1();
            Surd lambda{QuadExt(BigRational(-1, 2)) * slot_u1(), SparsePoly::constant(half)};
            Surd beta{half * slot_u1(), SparsePoly::constant(half)};  // -(Q1-)
            auto comp = complement_elementary(lin, m2, beta, rad);
            Surd grad = constraint_gradient(lambda, comp, rad, fit);
            out.g1A = (k1 * grad.a).divide_exact(fit.den);
            out.g1B = (k1 * grad.b).divide_exact(fit.den);
        }
        {
            // Q2+ slot: lambda = trM2/2 + sqrt(disc2)/2
            const SparsePoly& rad = slot_disc2();
            Surd lambda{half * slot_trM2(), SparsePoly::constant(half)};
            Surd beta{QuadExt(BigRational(-1, 2)) * slot_trM2(), SparsePoly::constant(half)};
            auto comp = complement_elementary(lin, m1, beta, rad);
            Surd grad = constraint_gradient(lambda, comp, rad, fit);
            out.g2A = (k1 * grad.a).divide_exact(fit.den * eps);
            out.g2B = (k1 * grad.b).divide_exact(fit.den * eps);
        }
        {
            // rational slot
            const SparsePoly rad = SparsePoly();
            Surd lambda{slot_muR(), SparsePoly()};
            std::array<Surd, 4> comp;
            {
                UniPoly quartic;
                quartic.var = "S";
                quartic.c.assign(5, SparsePoly());
                for (std::size_t i = 0; i < m1.c.size(); ++i)
                    for (std::size_t j = 0; j < m2.c.size(); ++j)
                        quartic.c[i + j] += m1.c[i] * m2.c[j];
                for (int k = 1; k <= 4; ++k) {
                    SparsePoly v = quartic.c[static_cast<std::size_t>(4 - k)];
                    if (k % 2 == 1) v = SparsePoly() - v;
                    comp[static_cast<std::size_t>(k - 1)] = Surd{v, SparsePoly()};
                }
            }
            Surd grad = constraint_gradient(lambda, comp, rad, fit);
            if (!grad.b.is_zero()) throw std::logic_error("rational slot gradient has a radical part");
            out.g3 = (k1 * grad.a).divide_exact(fit.den * eps);
        }
        return out;
    }();
    return g;
}

}  // namespace hv
