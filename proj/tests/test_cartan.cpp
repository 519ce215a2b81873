#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verifier/cartan.hpp"
#include "verifier/rng.hpp"

using namespace hv;

namespace {

QuadExt qr(long n, long d = 1) { return QuadExt(BigRational(n, d)); }

double eval_cubic(const Eigen::Matrix<double, 5, 1>& x) {
    std::map<std::string, QuadExt> pt;
    // evaluate in doubles directly from the polynomial structure
    const SparsePoly& p5 = cartan_cubic();
    double acc = 0.0;
    for (const auto& [e, c] : p5.terms()) {
        double t = c.to_double();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= x(static_cast<int>(i));
        acc += t;
    }
    return acc;
}

}  // namespace

TEST_CASE("cubic ties to det of the symmetric matrix model") {
    // det(sym3(x)) = -2 P(x) and |sym3(x)|^2 = 6 |x|^2, checked exactly
    Eigen::Matrix<SparsePoly, 5, 1> x;
    for (int k = 0; k < 5; ++k)
        x(k) = SparsePoly::variable(coord_names()[static_cast<std::size_t>(k)]);
    Eigen::Matrix<SparsePoly, 3, 3> t = sym3<SparsePoly>(x, SparsePoly::constant(QuadExt::sqrt3()));
    SparsePoly det = t(0, 0) * (t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1)) -
                     t(0, 1) * (t(1, 0) * t(2, 2) - t(1, 2) * t(2, 0)) +
                     t(0, 2) * (t(1, 0) * t(2, 1) - t(1, 1) * t(2, 0));
    CHECK(det == qr(-2) * cartan_cubic());

    SparsePoly frob;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) frob += t(i, j) * t(i, j);
    SparsePoly norm2;
    for (int k = 0; k < 5; ++k) norm2 += x(k) * x(k);
    CHECK(frob == qr(6) * norm2);

    // coordinates round-trip through the model
    Eigen::Matrix<SparsePoly, 5, 1> back =
        sym3_coords<SparsePoly>(t, SparsePoly::constant(QuadExt::sqrt3()));
    for (int k = 0; k < 5; ++k) CHECK(back(k) == x(k));
}

TEST_CASE("one-angle generators leave the cubic invariant") {
    InvarianceReport rep = check_invariance();
    CHECK(rep.ok);
    for (bool g : rep.per_generator) CHECK(g);
}

TEST_CASE("generator matrices are orthogonal modulo the circle relation") {
    SparsePoly c = SparsePoly::variable("c");
    SparsePoly unit = SparsePoly::constant(1L) - c * c;
    for (int g = 0; g < 3; ++g) {
        Mat5Poly o = so3_generator(g);
        for (int i = 0; i < 5; ++i) {
            for (int j = i; j < 5; ++j) {
                SparsePoly dot;
                for (int k = 0; k < 5; ++k)
                    dot += o[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                           o[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                dot = dot.reduce_square("s", unit);
                if (i == j)
                    CHECK(dot == SparsePoly::constant(1L));
                else
                    CHECK(dot.is_zero());
            }
        }
    }
}

TEST_CASE("section value matches the cubic on the section") {
    // P(p, 0, q, 0, 0) with p^2 + q^2 = 1 equals (3p - p^3)/2
    SparsePoly p = SparsePoly::variable("p"), q = SparsePoly::variable("q");
    SparsePoly composed = cartan_cubic()
                              .subs("x1", p)
                              .subs("z1", q)
                              .eval_partial({{"x2", qr(0)}, {"z2", qr(0)}, {"z3", qr(0)}});
    SparsePoly reduced = composed.reduce_square("q", SparsePoly::constant(1L) - p * p);
    SparsePoly expect = qr(3, 2) * p - qr(1, 2) * p.pow(3);
    CHECK(reduced == expect);
    CHECK(section_value(BigRational(1)) == BigRational(1));
    CHECK(section_value(BigRational(1, 2)) == BigRational(11, 16));
}

TEST_CASE("normal form reduction on random inputs") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Eigen::Matrix<double, 5, 1> x;
        for (int k = 0; k < 5; ++k) x(k) = rng.normal();
        if (x.norm() < 1e-6) continue;
        NormalForm nf = reduce_to_normal_form(x);
        CHECK(nf.p >= -1.0);
        CHECK(nf.p <= 1.0);
        CHECK(nf.q >= 0.0);
        CHECK(nf.residual < 1e-9);
        // O orthogonal
        Eigen::Matrix<double, 5, 5> gram = nf.O * nf.O.transpose();
        CHECK((gram - Eigen::Matrix<double, 5, 5>::Identity()).norm() < 1e-10);
        // the cubic's value is preserved: P(u) = (3p - p^3)/2
        Eigen::Matrix<double, 5, 1> u = x / nf.norm;
        double lhs = eval_cubic(u);
        double rhs = (3.0 * nf.p - nf.p * nf.p * nf.p) / 2.0;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("normal form fixes section points") {
    Eigen::Matrix<double, 5, 1> x;
    x << 0.3, 0.0, std::sqrt(1.0 - 0.09), 0.0, 0.0;
    NormalForm nf = reduce_to_normal_form(x);
    CHECK(nf.p == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(nf.residual < 1e-10);
}
