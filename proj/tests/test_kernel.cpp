#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verifier/bernstein.hpp"
#include "verifier/interval.hpp"
#include "verifier/quadext.hpp"
#include "verifier/rational.hpp"
#include "verifier/rng.hpp"
#include "verifier/sparsepoly.hpp"
#include "verifier/unipoly.hpp"

using namespace hv;

namespace {

SparsePoly var(const char* n) { return SparsePoly::variable(n); }

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
    BigRational a(1, 3), b(2, 6);
    CHECK(a == b);
    CHECK(BigRational("22/7") == BigRational(22, 7));
    CHECK(BigRational("-4/8").str() == "-1/2");
    CHECK((BigRational(1, 2) + BigRational(1, 3)) == BigRational(5, 6));
    CHECK((BigRational(3, 4) * BigRational(2, 9)) == BigRational(1, 6));
    CHECK(BigRational(-7, 2).pow(3) == BigRational(-343, 8));
    CHECK(BigRational(5, 3).floor() == BigRational(1));
    CHECK(BigRational(-5, 3).floor() == BigRational(-2));
    CHECK(BigRational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS(BigRational("1/0"));
    CHECK(gcd(BigRational(6, 5), BigRational(10, 3)) == BigRational(2, 15));
}

TEST_CASE("quadext field ops and exact sign") {
    QuadExt s3 = QuadExt::sqrt3();
    CHECK(s3 * s3 == QuadExt(BigRational(3)));
    QuadExt x(BigRational(2), BigRational(-1));  // 2 - sqrt(3) > 0
    CHECK(x.sign() == 1);
    QuadExt y(BigRational(-2), BigRational(1));  // sqrt(3) - 2 < 0
    CHECK(y.sign() == -1);
    QuadExt z(BigRational(-1), BigRational(1));  // sqrt(3) - 1 > 0
    CHECK(z.sign() == 1);
    CHECK((x * y).sign() == -1);
    QuadExt inv = QuadExt(BigRational(1)) / x;  // 1/(2-sqrt3) = 2+sqrt3
    CHECK(inv == QuadExt(BigRational(2), BigRational(1)));
    CHECK((x < z));
}

TEST_CASE("interval enclosures") {
    Interval a(BigRational(-1), BigRational(2));
    Interval sq = a.pow(2);
    CHECK(sq.lo == BigRational(0));
    CHECK(sq.hi == BigRational(4));
    Interval m = a * Interval(BigRational(-3), BigRational(1, 2));
    CHECK(m.lo == BigRational(-6));
    CHECK(m.hi == BigRational(3));
    const Interval& s3 = sqrt3_enclosure();
    CHECK(s3.width() < BigRational(1, 1000000000));
    CHECK(s3.lo * s3.lo < BigRational(3));
    CHECK(BigRational(3) < s3.hi * s3.hi);
    Interval e = enclose(QuadExt(BigRational(1), BigRational(-1)));  // 1 - sqrt(3)
    CHECK(e.lo < BigRational(-73, 100));
    CHECK(e.hi > BigRational(-74, 100));
    CHECK(e.width() < BigRational(1, 1000000000));
}

TEST_CASE("sparse polynomial arithmetic") {
    SparsePoly p = var("p");
    SparsePoly f = (p * p * p - QuadExt(BigRational(3)) * p);  // b = p^3 - 3p
    SparsePoly sq = f.pow(2);
    SparsePoly expect = p.pow(6) - QuadExt(BigRational(6)) * p.pow(4) +
                        QuadExt(BigRational(9)) * p.pow(2);
    CHECK(sq == expect);
    CHECK(sq.degree("p") == 6);
    CHECK(sq.total_degree() == 6);

    SparsePoly x = var("x"), y = var("y");
    SparsePoly g = (x + y).pow(3);
    CHECK(g.terms().size() == 4);
    CHECK(g.deriv("x") == QuadExt(BigRational(3)) * (x + y).pow(2));

    // eval homomorphism on random rational points
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        long nx = static_cast<long>(rng.next() % 41) - 20;
        long ny = static_cast<long>(rng.next() % 41) - 20;
        std::map<std::string, QuadExt> pt{{"x", QuadExt(BigRational(nx, 7))},
                                          {"y", QuadExt(BigRational(ny, 5))}};
        QuadExt lhs = (g * g).eval(pt);
        QuadExt rhs = g.eval(pt) * g.eval(pt);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("substitution and square reduction") {
    SparsePoly c = var("c"), s = var("s");
    SparsePoly rel = SparsePoly::constant(1L) - c * c;  // s^2 -> 1 - c^2
    SparsePoly f = s.pow(4) + s.pow(2) * c + s * c;
    SparsePoly r = f.reduce_square("s", rel);
    CHECK(r.degree("s") <= 1);
    // s^4 -> (1-c^2)^2, s^2 c -> (1-c^2) c
    SparsePoly expect = rel.pow(2) + rel * c + s * c;
    CHECK(r == expect);

    SparsePoly q = var("q"), pp = var("p");
    SparsePoly sub = f.subs("s", pp + q);
    std::map<std::string, QuadExt> pt{{"c", QuadExt(BigRational(2, 3))},
                                      {"p", QuadExt(BigRational(1, 2))},
                                      {"q", QuadExt(BigRational(-3, 4))}};
    std::map<std::string, QuadExt> pt2 = pt;
    pt2["s"] = pt["p"] + pt["q"];
    CHECK(sub.eval(pt) == f.eval(pt2));
}

TEST_CASE("exact division") {
    SparsePoly x = var("x"), y = var("y");
    SparsePoly a = (x + y).pow(3) * (x - y);
    SparsePoly q = a.divide_exact(x + y);
    CHECK(q == (x + y).pow(2) * (x - y));
    CHECK_THROWS(a.divide_exact(x + y + SparsePoly::constant(1L)));
}

TEST_CASE("resultants") {
    SparsePoly S = var("S"), u = var("u"), v = var("v");
    UniPoly f = UniPoly::collect(S - u, "S");
    UniPoly g = UniPoly::collect(S - v, "S");
    SparsePoly r = resultant(f, g);
    CHECK((r == u - v || r == v - u));

    UniPoly f2 = UniPoly::collect(S * S - SparsePoly::constant(1L), "S");
    UniPoly g2 = UniPoly::collect(S - SparsePoly::constant(1L), "S");
    CHECK(resultant(f2, g2).is_zero());

    // Res_x(x^2 - a, x^2 - b) = (a - b)^2
    SparsePoly aa = var("a"), bb = var("b");
    UniPoly f3 = UniPoly::collect(S * S - aa, "S");
    UniPoly g3 = UniPoly::collect(S * S - bb, "S");
    CHECK(resultant(f3, g3) == (aa - bb).pow(2));
}

TEST_CASE("rational univariate roots") {
    // (x^2 - 2)(x - 1/2), roots -sqrt2, 1/2, sqrt2
    SparsePoly x = var("x");
    SparsePoly f = (x * x - SparsePoly::constant(2L)) * (x - SparsePoly::constant(QuadExt(BigRational(1, 2))));
    RatPoly rp = RatPoly::from_sparse(f);
    auto roots = isolate_roots(rp, BigRational(-2), BigRational(2), BigRational(1, 1 << 20));
    CHECK(roots.size() == 3);
    int exact = 0;
    for (const auto& r : roots)
        if (r.exact) {
            ++exact;
            CHECK(r.value == BigRational(1, 2));
        }
    CHECK(exact >= 0);  // the rational root may be caught exactly or bracketed

    // squarefree collapse: (x-1)^2 has a single isolated root at 1
    RatPoly sq = RatPoly::from_sparse((x - SparsePoly::constant(1L)).pow(2));
    auto roots2 = isolate_roots(sq, BigRational(0), BigRational(2), BigRational(1, 1024));
    CHECK(roots2.size() == 1);
}

TEST_CASE("bernstein bounds") {
    // x^2 - x on [0,1]: range [-1/4, 0]; Bernstein coefficients 0, -1/2, 0
    SparsePoly x = var("x");
    SparsePoly f = x * x - x;
    Box unit{{{BigRational(0), BigRational(1)}}};
    auto [lo, hi] = bernstein_bounds(f, unit, {"x"});
    CHECK(lo == BigRational(-1, 2));
    CHECK(hi == BigRational(0));

    // inclusion monotonicity under subdivision
    Box left{{{BigRational(0), BigRational(1, 2)}}};
    auto [l2, h2] = bernstein_bounds(f, left, {"x"});
    CHECK(l2 >= lo);
    CHECK(h2 <= hi);

    // two variables, exactness at corners
    SparsePoly y = var("y");
    SparsePoly g = x * y - x - y;
    Box b2{{{BigRational(-1), BigRational(1)}, {BigRational(0), BigRational(2)}}};
    auto [lg, hg] = bernstein_bounds(g, b2, {"x", "y"});
    std::map<std::string, QuadExt> corner{{"x", QuadExt(BigRational(-1))},
                                          {"y", QuadExt(BigRational(2))}};
    BigRational val = g.eval(corner).a;
    CHECK(lg <= val);
    CHECK(val <= hg);
}

TEST_CASE("tensor splits agree with direct restriction") {
    SparsePoly x = var("x"), y = var("y");
    SparsePoly f = x.pow(3) * y - QuadExt(BigRational(2)) * x * y.pow(2) + y -
                   SparsePoly::constant(1L);
    Box root{{{BigRational(-1), BigRational(1)}, {BigRational(0), BigRational(1)}}};
    Tensor t = Tensor::from_poly(f, {"x", "y"});
    t.restrict_to(root);
    t.to_bernstein();
    Tensor upper = t.split_half(0, true);
    Box ub = root.half(0, true);
    Tensor direct = Tensor::from_poly(f, {"x", "y"});
    direct.restrict_to(ub);
    direct.to_bernstein();
    CHECK(upper.coeffs() == direct.coeffs());
}

TEST_CASE("centered bound encloses the range") {
    SparsePoly x = var("x"), y = var("y");
    SparsePoly f = x * x * y - y * y + SparsePoly::constant(QuadExt(BigRational(0), BigRational(1)));
    Box b{{{BigRational(-1, 2), BigRational(1, 2)}, {BigRational(1, 4), BigRational(3, 4)}}};
    Interval enc = centered_bound(f, b, {"x", "y"});
    SplitMix64 rng(3);
    for (int i = 0; i < 100; ++i) {
        BigRational px(static_cast<long>(rng.next() % 201) - 100, 200);
        BigRational py(static_cast<long>(rng.next() % 101) + 50, 200);
        std::map<std::string, QuadExt> pt{{"x", QuadExt(px)}, {"y", QuadExt(py)}};
        Interval v = enclose(f.eval(pt));
        CHECK(enc.lo <= v.lo);
        CHECK(v.hi <= enc.hi);
    }
}

TEST_CASE("json round trip") {
    nlohmann::json j = nlohmann::json::parse(
        R"({"vars":["p","delta"],"terms":[["3",[1,0]],["-3/2",[1,1]],["1/2",[3,1]]]})");
    SparsePoly f = SparsePoly::from_json(j);
    SparsePoly p = var("p"), d = var("delta");
    SparsePoly expect = QuadExt(BigRational(3)) * p - QuadExt(BigRational(3, 2)) * p * d +
                        QuadExt(BigRational(1, 2)) * p.pow(3) * d;
    CHECK(f == expect);
    CHECK(SparsePoly::from_json(f.to_json()) == f);
    CHECK(f.hash() == expect.hash());
    CHECK(f.hash() != (f + p).hash());
}
