#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <nlohmann/json.hpp>

#include "verifier/identity.hpp"
#include "verifier/jacobi.hpp"
#include "verifier/spectrum.hpp"

using namespace hv;

namespace {

const nlohmann::json& frozen() {
    static const nlohmann::json j = [] {
        std::ifstream in(std::string(HV_FROZEN_DIR) + "/frozen.json");
        if (!in.good()) throw std::runtime_error("frozen data missing");
        return nlohmann::json::parse(in);
    }();
    return j;
}

SparsePoly fr_poly(const std::string& key) { return SparsePoly::from_json(frozen().at(key)); }

BigRational fr_rat(const nlohmann::json& j) { return BigRational(j.get<std::string>()); }

void check_eps_form(const SparsePoly& mine_delta, const std::string& key) {
    CAPTURE(key);
    CHECK(to_eps_convention(mine_delta) == fr_poly(key));
}

}  // namespace

TEST_CASE("trace identity holds symbolically") {
    CHECK(trace_identity_residual().is_zero());

    Eigen::Matrix<double, 5, 1> e1 = Eigen::Matrix<double, 5, 1>::Zero();
    e1(0) = 1.0;
    Eigen::Matrix<double, 5, 5> h = hessian_at(e1, 0.0);
    Eigen::Matrix<double, 5, 5> want = Eigen::Matrix<double, 5, 5>::Zero();
    want.diagonal() << 2, -7, 2, 2, -7;
    CHECK((h - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("section characteristic polynomial splits along closed forms") {
    const NormalFormCharpoly& cp = charpoly_normal_form();  // throws on any block mismatch
    const auto& fa = frozen().at("a");
    for (int k = 0; k < 5; ++k) {
        CAPTURE(k);
        CHECK(cp.a[static_cast<std::size_t>(k)] == SparsePoly::from_json(fa.at(k)));
    }

    auto spot = [&](const BigRational& p, const BigRational& d, const std::string& key) {
        const auto& want = frozen().at(key);
        std::map<std::string, BigRational> at{{"p", p}, {"delta", d}};
        for (int k = 0; k < 5; ++k) {
            CAPTURE(key);
            CAPTURE(k);
            SparsePoly f = cp.a[static_cast<std::size_t>(k)];
            CHECK(eval_poly<BigRational>(f, at, BigRational(0)) == fr_rat(want.at(k)));
        }
    };
    spot(BigRational(1), BigRational(0), "a-spot-p1-d0");
    spot(BigRational(1, 2), BigRational(1, 4), "a-spot-p1/2-d1/4");
}

TEST_CASE("slot polynomials match frozen forms") {
    check_eps_form(slot_muR(), "muR");
    check_eps_form(slot_u1(), "u1");
    check_eps_form(slot_v1(), "v1");
    check_eps_form(slot_trM2(), "trM2");
    check_eps_form(slot_detM2(), "detM2");
    check_eps_form(slot_disc1(), "disc1");
    check_eps_form(slot_disc2(), "R2d");
    // same discriminant written over a common denominator of four
    SparsePoly drad = fr_poly("Drad");
    CHECK(SparsePoly(4) * to_eps_convention(slot_disc1()) == drad);
}

TEST_CASE("surd spot") {
    const auto& s = frozen().at("surd-spot");
    BigRational p = fr_rat(s.at("p"));
    BigRational delta = BigRational(1) - fr_rat(s.at("eps"));
    SlotValues v = slot_values(p, delta);
    CHECK(v.R == fr_rat(s.at("muR")));
    CHECK(v.q1_center == fr_rat(s.at("minus-u1-half")));
    CHECK(BigRational(4) * v.q1_radicand == fr_rat(s.at("disc1")));
    CHECK(v.q2_center == fr_rat(s.at("trM2-half")));
    CHECK(BigRational(4) * v.q2_radicand == fr_rat(s.at("disc2")));
}

TEST_CASE("slot values and assembled ordering at frozen spots") {
    for (const auto& [key, want] : frozen().at("slot-spots").items()) {
        CAPTURE(key);
        auto comma = key.find(',');
        BigRational p(key.substr(0, comma));
        BigRational delta = BigRational(1) - BigRational(key.substr(comma + 1));
        SlotValues v = slot_values(p, delta);
        CHECK(v.vR == doctest::Approx(want.at("R").get<double>()).epsilon(1e-12));
        CHECK(v.q1p == doctest::Approx(want.at("Q1+").get<double>()).epsilon(1e-12));
        CHECK(v.q1m == doctest::Approx(want.at("Q1-").get<double>()).epsilon(1e-12));
        CHECK(v.q2p == doctest::Approx(want.at("Q2+").get<double>()).epsilon(1e-12));
        CHECK(v.q2m == doctest::Approx(want.at("Q2-").get<double>()).epsilon(1e-12));

        OrderedSpectrum os = ordered_spectrum(p, delta);
        for (int i = 0; i + 1 < 5; ++i) CHECK(os.lam[static_cast<std::size_t>(i)] >= os.lam[static_cast<std::size_t>(i + 1)]);

        double pd = p.to_double();
        Eigen::Matrix<double, 5, 1> x = Eigen::Matrix<double, 5, 1>::Zero();
        x(0) = pd;
        x(2) = std::sqrt(1.0 - pd * pd);
        auto [ev, evec] = jacobi_eigen<5>(hessian_at(x, delta.to_double()));
        for (int i = 0; i < 5; ++i)
            CHECK(std::abs(ev(i) - os.lam[static_cast<std::size_t>(i)]) < 1e-9);
    }
}

TEST_CASE("region classification is exact at the boundary") {
    CHECK(classify_region(BigRational(1), BigRational(0)) == 1);
    CHECK(classify_region(BigRational(-1), BigRational(0)) == -1);
    CHECK(classify_region(BigRational(4095, 4096), BigRational(0)) == 0);
    // p0(eps = 1/2) = 0.66874030...
    CHECK(classify_region(BigRational(6687, 10000), BigRational(1, 2)) == 0);
    CHECK(classify_region(BigRational(6688, 10000), BigRational(1, 2)) == 1);
    CHECK(classify_region(BigRational(-6688, 10000), BigRational(1, 2)) == -1);
}

TEST_CASE("crossing resultants and root isolation") {
    const CrossingStructure& cs = crossing_structure();
    auto matches_up_to_sign = [&](const SparsePoly& mine, const std::string& key) {
        SparsePoly m = to_eps_convention(mine);
        SparsePoly f = fr_poly(key);
        bool same = (m - f).is_zero() || (m + f).is_zero();
        CAPTURE(key);
        CHECK(same);
    };
    matches_up_to_sign(cs.res_rq1, "Res-F1-M1");
    matches_up_to_sign(cs.res_rq2, "Res-F1-M2");
    matches_up_to_sign(cs.res_q1q2, "Res-M1-M2");

    SparsePoly quartic = to_delta_convention(fr_poly("crossing-quartic"));

    CrossingScan mid = scan_crossings(BigRational(1, 2));
    REQUIRE(mid.rq1.size() == 2);
    for (const auto& r : mid.rq1) {
        // each bracket holds a root of the quartic defining p0
        if (r.exact) {
            CHECK(eval_poly<BigRational>(quartic, {{"p", r.value}, {"delta", BigRational(1, 2)}},
                                         BigRational(0))
                      .is_zero());
        } else {
            auto at = [&](const BigRational& p) {
                return eval_poly<BigRational>(
                    quartic, {{"p", p}, {"delta", BigRational(1, 2)}}, BigRational(0));
            };
            CHECK(at(r.lo).sign() * at(r.hi).sign() < 0);
        }
    }
    auto only_endpoints = [&](const std::vector<RootBracket>& roots) {
        for (const auto& r : roots) {
            CHECK(r.exact);
            CHECK(r.value.abs() == BigRational(1));
        }
    };
    only_endpoints(mid.rq2);
    only_endpoints(mid.q1q2);

    // the two crossings collide with the endpoints when delta = 0
    CrossingScan flat = scan_crossings(BigRational(0));
    only_endpoints(flat.rq1);
}

TEST_CASE("eigenvalue constraint fit") {
    const SymbolicFit& fit = fit_identity_symbolic();  // verifies the identity internally
    const char* keys[3] = {"c5", "c3", "c1"};
    for (int k = 0; k < 3; ++k) {
        CAPTURE(keys[k]);
        const auto& rf = frozen().at(keys[k]);
        SparsePoly num = SparsePoly::from_json(rf.at("num"));
        SparsePoly den = SparsePoly::from_json(rf.at("den"));
        CHECK(fit.num[static_cast<std::size_t>(k)] * den == fit.den * num);
    }

    auto check_spot = [&](const BigRational& delta, const std::string& key) {
        FitAt f = fit_identity_at(delta);
        CHECK(f.exact);
        const auto& want = frozen().at(key);
        for (int k = 0; k < 3; ++k) {
            CAPTURE(key);
            CAPTURE(k);
            CHECK(f.c[static_cast<std::size_t>(k)] == fr_rat(want.at(k)));
        }
    };
    check_spot(BigRational(0), "c-spot-d0");
    check_spot(BigRational(1, 2), "c-spot-d1/2");
    CHECK(fit_identity_at(BigRational(1, 3)).exact);
    CHECK(fit_identity_at(BigRational(9, 10)).exact);
}

TEST_CASE("constraint gradients match frozen forms") {
    const GradientPolys& g = gradient_polys();
    check_eps_form(g.g1A, "g1A_hat");
    check_eps_form(g.g1B, "g1B_hat");
    check_eps_form(g.g2A, "g2A_hat");
    check_eps_form(g.g2B, "g2B_hat");
    check_eps_form(g.g3, "g3_hat");

    // spot values were recorded at the integer-cleared scale, 16x the stored polynomials
    std::map<std::string, BigRational> at{{"p", BigRational(1, 2)}, {"delta", BigRational(1, 2)}};
    auto ev16 = [&](const SparsePoly& f) {
        return BigRational(16) * eval_poly<BigRational>(f, at, BigRational(0));
    };
    auto ev = [&](const SparsePoly& f) { return eval_poly<BigRational>(f, at, BigRational(0)); };
    const auto& s1 = frozen().at("g1hat-spot");
    CHECK(ev16(g.g1A) == fr_rat(s1.at("A")));
    CHECK(ev16(g.g1B) == fr_rat(s1.at("B")));
    CHECK(ev(slot_disc1()) == fr_rat(s1.at("rad")));
    const auto& s2 = frozen().at("g2hat-spot");
    CHECK(ev16(g.g2A) == fr_rat(s2.at("A")));
    CHECK(ev16(g.g2B) == fr_rat(s2.at("B")));
    CHECK(ev(slot_disc2()) == fr_rat(s2.at("rad")));
    CHECK(ev16(g.g3) == fr_rat(frozen().at("g3hat-spot")));
}
