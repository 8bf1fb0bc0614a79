#include "doctest.h"

#include <cmath>
#include <random>

#include "nodal/dualcurve.hpp"
#include "nodal/families.hpp"
#include "random_poly.hpp"

using namespace nodal;
using namespace nodal::testing;

namespace {

const std::array<Scalar, 4> kExample{Scalar(1), Scalar(7, 2), Scalar(7, 2), Scalar(1)};

UniPoly up(std::initializer_list<Scalar> c) { return UniPoly(c); }

}  // namespace

TEST_CASE("torus locus of the example equals the printed pair") {
    const LocusCurve c = torus_locus(kExample);
    const UniPoly t = UniPoly::t();
    const RationalFunction s(-(t * up({2, 0, -7, -4})), up({4, 7, 0, -2}));
    const UniPoly k = up({1, 1}) * up({1, 2}) * up({2, 1});
    const RationalFunction a(-(t * up({4, 7, 0, -2})), Scalar(2) * k * k);
    CHECK(c.s == s);
    CHECK(c.alpha_product == a);
    CHECK(c.s.numerator() * s.denominator() == s.numerator() * c.s.denominator());

    const LocusCurve cf = torus_locus_closed_form(kExample);
    CHECK(cf.s == c.s);
    CHECK(cf.alpha_product == c.alpha_product);
    CHECK(c.s(Scalar(0)).is_zero());
    CHECK(c.alpha_product(Scalar(0)).is_zero());
}

TEST_CASE("torus locus from the dual curve matches the closed form for random A") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) {
        std::array<Scalar, 4> A{};
        for (auto& a : A) a = random_scalar(rng);
        A[0] = random_nonzero(rng);
        const LocusCurve c = torus_locus(A), cf = torus_locus_closed_form(A);
        CHECK(c.s == cf.s);
        CHECK(c.alpha_product == cf.alpha_product);
    }
}

TEST_CASE("torus locus guards") {
    CHECK_THROWS(torus_locus({Scalar(0), Scalar(0), Scalar(0), Scalar(0)}));
    // 2A0 + A1 t - A3 t^3 vanishes identically.
    CHECK_THROWS(torus_locus({Scalar(0), Scalar(0), Scalar(1), Scalar(0)}));
    CHECK_THROWS(dual_curve_param(std::array<Scalar, 4>{Scalar(0), Scalar(0), Scalar(0), Scalar(0)}));
}

TEST_CASE("dual curve closed form holds symbolically") {
    const auto A = symbolic_coefficients();
    CHECK(projectively_equal(dual_curve_param(A), dual_curve_closed_form(A)));
    const auto q = dual_quartic_param(A);
    const MultiPoly x0 = MultiPoly::variable("x0"), x3 = MultiPoly::variable("x3");
    const MultiPoly K = torus_cubic(A);
    CHECK(projectively_equal(q, PlaneCurveParam{{x0.pow(2) * x3.pow(2), x0 * K, x3 * K}}));
}

TEST_CASE("dual quartic parametrization and incidence") {
    const auto q = dual_quartic_param(kExample);
    const MultiPoly x0 = MultiPoly::variable("x0"), x3 = MultiPoly::variable("x3");
    const MultiPoly K = torus_cubic(kExample);
    CHECK(projectively_equal(q, PlaneCurveParam{{x0.pow(2) * x3.pow(2), x0 * K, x3 * K}}));
    const auto aff = q.affine();
    const UniPoly t = UniPoly::t();
    const UniPoly k = up({1, Scalar(7, 2), Scalar(7, 2), 1});
    CHECK(aff[2] * k.leading() == k * aff[2].leading());
    CHECK(aff[1] * k.leading() == t * k * aff[1].leading());
    CHECK(aff[0] * k.leading() == t * t * aff[2].leading());

    // K = x0^3 shares x0^2 with every component.
    const auto cube = dual_quartic_param(std::array<Scalar, 4>{Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
    CHECK(projectively_equal(cube, PlaneCurveParam{{x3.pow(2), x0.pow(2), x0 * x3}}));
    CHECK_THROWS(dual_quartic_param(std::array<Scalar, 4>{Scalar(0), Scalar(0), Scalar(0), Scalar(0)}));

    // the line (beta : 4 : 4s) pairs with psi to give the pencil member
    std::mt19937_64 rng(5);
    const MultiPoly psi0 = x0.pow(2) * x3.pow(2), psi1 = x0 * K, psi2 = x3 * K;
    for (int i = 0; i < 5; ++i) {
        const Scalar beta = random_scalar(rng), s = random_scalar(rng);
        const MultiPoly pairing = beta * psi0 + 4 * psi1 + (4 * s) * psi2;
        CHECK(BinaryForm::from_multipoly(pairing.with_variables({"x0", "x3"}), "x0", "x3").coeffs() ==
              multiple_root_form(kExample, beta, s).coeffs());
    }
}

TEST_CASE("multiple-root condition vanishes on the locus") {
    const LocusCurve c = torus_locus(kExample);
    std::mt19937_64 rng(21);
    int checked = 0;
    while (checked < 20) {
        const Scalar t = random_scalar(rng);
        if (c.alpha_product.denominator()(t).is_zero() || c.s.denominator()(t).is_zero()) continue;
        if (c.alpha_product(t).is_zero()) continue;
        CHECK(multiple_root_condition(kExample, Scalar(1) / c.alpha_product(t), c.s(t)).is_zero());
        ++checked;
    }
    // off the locus
    for (int i = 0; i < 10; ++i) {
        const Scalar beta = random_nonzero(rng), s = random_scalar(rng);
        CHECK_FALSE(multiple_root_condition(kExample, beta, s).is_zero());
    }
    // beta = 0: discriminant of 4KL, zero exactly when K L has a repeated root
    CHECK(multiple_root_condition(kExample, Scalar(0), Scalar(1)).is_zero());
    CHECK_FALSE(multiple_root_condition(kExample, Scalar(0), Scalar(3)).is_zero());
}

TEST_CASE("dual curve points satisfy the multiple-root condition") {
    const auto aff = dual_curve_param(kExample).affine();
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        const Scalar t = random_scalar(rng);
        const Scalar w = aff[2](t);
        if (w.is_zero()) continue;
        CHECK(multiple_root_condition(kExample, aff[0](t) / w, aff[1](t) / w).is_zero());
    }
}

TEST_CASE("cusps of the example") {
    const LocusCurve c = torus_locus(kExample);
    const CuspReport r = find_cusps(c, -5, 5, 1e-12);
    REQUIRE(r.t.size() == 2);
    CHECK(r.t[0] == doctest::Approx(0.250230892023435).epsilon(1e-12));
    CHECK(r.t[1] == doctest::Approx(3.99630913638892).epsilon(1e-12));
    CHECK(r.complex_count == 6);
    CHECK(find_cusps(c, -100, 100).t.size() == 2);

    const UniPoly t = UniPoly::t();
    const LocusCurve smooth{RationalFunction(t), RationalFunction(t * t)};
    CHECK(find_cusps(smooth, -5, 5).t.empty());
    CHECK(find_cusps(smooth, -5, 5).complex_count == 0);
}

TEST_CASE("double points of the example") {
    const LocusCurve c = torus_locus(kExample);
    const DoublePointReport r = find_double_points(c);
    const double root = (-15 + std::sqrt(97.0)) / 16;
    bool found = false;
    for (const auto& d : r.real) {
        if (std::abs(d.s - 0.25) < 1e-9 && std::abs(d.alpha_product - 16.0 / 9) < 1e-9) {
            found = std::abs(d.t1 - root) < 1e-6 || std::abs(d.t2 - root) < 1e-6;
            CHECK(std::abs(d.t1 - (-15 - std::sqrt(97.0)) / 16) < 1e-9);
        }
        CHECK(d.t1 < d.t2);
    }
    CHECK(found);
    CHECK(r.real.size() == 3);
    CHECK(r.complex_pairs == 3);

    const UniPoly t = UniPoly::t();
    const LocusCurve injective{RationalFunction(t), RationalFunction(t * t * t)};
    const auto none = find_double_points(injective);
    CHECK(none.real.empty());
    CHECK(none.complex_pairs == 0);
}

TEST_CASE("double-point census on a random coefficient vector") {
    std::mt19937_64 rng(97);
    std::array<Scalar, 4> A{};
    for (auto& a : A) a = random_nonzero(rng);
    const LocusCurve c = torus_locus(A);
    const auto r = find_double_points(c);
    const auto cusps = find_cusps(c, -1e6, 1e6);
    MESSAGE("random A census: real double points " << r.real.size() << ", complex pairs " << r.complex_pairs
                                                    << ", cusps " << cusps.complex_count);
    // frozen from an independent sympy resultant solve for A = (5/3, 2, 1/2, -4/3)
    REQUIRE(A == std::array<Scalar, 4>{Scalar(5, 3), Scalar(2), Scalar(1, 2), Scalar(-4, 3)});
    CHECK(r.complex_pairs == 3);
    CHECK(r.real.empty());
    CHECK(cusps.complex_count == 6);
    for (const auto& d : r.real) {
        CHECK(static_cast<double>(c.s.eval(d.t2)) == doctest::Approx(d.s).epsilon(1e-8));
        CHECK(static_cast<double>(c.alpha_product.eval(d.t2)) == doctest::Approx(d.alpha_product).epsilon(1e-8));
    }
}

TEST_CASE("alpha product is positive between the branch parameter and zero") {
    const LocusCurve c = torus_locus(kExample);
    // (-15 + sqrt 97)/16 lies in (-0.33, -0.32)
    const Scalar lo(-32, 100);
    for (int k = 1; k <= 10; ++k) {
        const Scalar t = lo * Scalar(11 - k, 11);
        CHECK(c.alpha_product(t).sign() > 0);
    }
    CHECK(lo.to_double() > (-15 + std::sqrt(97.0)) / 16);
}

TEST_CASE("plot windows") {
    const LocusCurve c = torus_locus(kExample);
    const auto windows = default_plot_windows();
    REQUIRE(windows.size() == 2);
    CHECK(windows[0].s_range == std::pair(-3.5, 5.3));
    CHECK(windows[0].alpha_range == std::pair(-4.2, 7.7));

    const auto main_rows = emit_plot(c, windows[0]);
    double best = 1e9;
    for (const auto& r : main_rows) {
        CHECK(r.s >= -3.5);
        CHECK(r.s <= 5.3);
        CHECK(r.alpha_product >= -4.2);
        CHECK(r.alpha_product <= 7.7);
        best = std::min(best, std::hypot(r.s - 0.25, r.alpha_product - 16.0 / 9));
    }
    CHECK(best < 1e-6);

    const auto zoom = emit_plot(c, windows[1]);
    REQUIRE_FALSE(zoom.empty());
    int neg = -1, pos = -1;
    for (const auto& r : zoom) {
        if (r.t < 0) neg = r.segment;
        if (r.t > 0 && pos < 0) pos = r.segment;
    }
    CHECK(neg >= 0);
    CHECK(pos > neg);
    bool origin_in_both = false;
    for (std::size_t i = 0; i + 1 < zoom.size(); ++i) {
        if (zoom[i].t == 0 && zoom[i + 1].t == 0) origin_in_both = zoom[i].segment != zoom[i + 1].segment;
    }
    CHECK(origin_in_both);

    PlotWindow empty = windows[0];
    empty.t_ranges.clear();
    CHECK(emit_plot(c, empty).empty());
    empty = windows[0];
    empty.samples = 1;
    CHECK_THROWS(emit_plot(c, empty));

    const std::string csv = plot_csv(zoom);
    CHECK(csv.rfind("t,s,alpha_product,segment_id\n", 0) == 0);
}

TEST_CASE("plot segments split at poles") {
    const UniPoly t = UniPoly::t();
    const LocusCurve c{RationalFunction(UniPoly(1), t - UniPoly(1)), RationalFunction(t)};
    PlotWindow w{"pole", {{0.0, 2.0}}, {-1e9, 1e9}, {-10, 10}, 101, {}, {}};
    const auto rows = emit_plot(c, w);
    int before = -1, after = -1;
    for (const auto& r : rows) {
        CHECK(r.t != 1.0);
        if (r.t < 1) before = r.segment;
        if (r.t > 1 && after < 0) after = r.segment;
    }
    CHECK(before == 0);
    CHECK(after == 1);
}
