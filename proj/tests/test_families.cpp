#include "doctest.h"

#include <random>

#include "nodal/families.hpp"
#include "random_poly.hpp"

using namespace nodal;
using nodal::testing::random_nonzero;
using nodal::testing::random_scalar;

namespace {

MultiPoly P(const char* s) { return MultiPoly::parse(s); }
MultiPoly X(const char* s) { return MultiPoly::parse(s, x_coords()); }

}  // namespace

TEST_CASE("quadric context") {
    const auto ctx = quadric_context();
    CHECK(ctx.Q.str() == "x0*x3 - x1*x2");
    CHECK(substitute(ctx.Q, ctx.segre).is_zero());
    const RulingPoint rp{Scalar(2), Scalar(3), Scalar(-1), Scalar(5, 2)};
    const auto x = segre_point(rp);
    CHECK(evaluate(ctx.Q, x).is_zero());
    const auto back = segre_point(ruling_point(x));
    for (int i = 0; i < 4; ++i) CHECK(back[i] * x[0] == x[i] * back[0]);
    CHECK_THROWS(ruling_point({1, 0, 0, 1}));
}

TEST_CASE("conic bundle") {
    const auto cb = conic_bundle(1, P("s0*t0"));
    CHECK(cb.equation.str() == "-s0*t0*w0^2 + w1*w2");
    CHECK(cb.equation == P("w1*w2 - s0*t0*w0^2"));
    CHECK(is_homogeneous(cb.equation, cb.grading()));

    const MultiPoly phi = P("(s0*t0 + 2*s1*t1)*(3*s0*t0 - s1*t1)*(s0*t0 + 5*s1*t1)");
    const auto torus = conic_bundle(3, phi, BundleSign::Plus);
    CHECK(torus.equation == P("w1*w2") + phi * P("w0^2"));
    CHECK(is_homogeneous(torus.equation, torus.grading()));
    CHECK(multidegree(torus.equation, torus.grading()) == std::vector<int>{3, 3, 2});

    CHECK_THROWS_AS(conic_bundle(2, P("s0^2*t0^3")), std::invalid_argument);
    CHECK_THROWS_AS(conic_bundle(1, P("s0*t0 + s1")), std::invalid_argument);
    CHECK_THROWS_AS(conic_bundle(1, P("s0*t0*x0")), std::invalid_argument);
}

TEST_CASE("deformation family") {
    const MultiPoly K = X("x0^3"), L = X("x3");
    const auto zero = deformation_family(K, L, 0, 0);
    CHECK(zero.first == P("y1*y2 - x0^3*x3*y0^2"));
    CHECK(zero.second == -(quadric() * P("y0")));
    const auto generic = deformation_family(K, L, P("al1"), P("al2"));
    CHECK(generic.second == P("al2*y1 + al1*y2 - (x0*x3 - x1*x2)*y0"));
    const auto smoke = deformation_family(K, L, 1, 1);
    CHECK(smoke.first.str() == "-x0^3*x3*y0^2 + y1*y2");
    CHECK(smoke.second == P("y1 + y2 - x0*x3*y0 + x1*x2*y0"));
    CHECK_THROWS(deformation_family(X("x0^2"), L, 1, 1));
    CHECK_THROWS(deformation_family(K, X("x0^2"), 1, 1));
    CHECK_THROWS(deformation_family(X("x0^3 + x1"), L, 1, 1));
}

TEST_CASE("branch quartic") {
    const MultiPoly K = X("x0^3 - x1*x2*x3"), L = X("x0 + x2");
    CHECK(branch_quartic(K, L, 0) == quadric() * quadric());
    const MultiPoly F = branch_quartic(K, L, Scalar(1, 3));
    CHECK(F.is_homogeneous());
    CHECK(F.total_degree() == 4);
    const auto spec = deformation_family(K, L, Scalar(1, 3), 1);
    CHECK(spec.branch() == F);
}

TEST_CASE("tangent plane") {
    CHECK(tangent_plane(RulingPoint{1, 0, 0, 1}) == X("-x2"));
    CHECK(tangent_plane(RulingPoint{0, 1, 0, 1}) == X("x0"));
    CHECK(tangent_plane(P("1"), P("lam"), P("1"), P("mu")) == P("lam*mu*x0 - lam*x1 - mu*x2 + x3"));
    CHECK_THROWS(tangent_plane(RulingPoint{0, 0, 1, 1}));

    // Gradient of Q at (0:1:0:0) is (0,0,-1,0).
    const auto x = segre_point({1, 0, 0, 1});
    std::vector<Scalar> grad;
    for (const auto& v : x_coords()) grad.push_back(evaluate(differentiate(quadric(), v), x));
    CHECK(grad == std::vector<Scalar>{0, 0, -1, 0});

    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        const RulingPoint p{random_nonzero(rng), random_scalar(rng), random_nonzero(rng), random_scalar(rng)};
        const auto img = segre_point(p);
        const MultiPoly T = tangent_plane(p);
        CHECK(evaluate(T, img).is_zero());
        std::vector<Scalar> dq, dt;
        for (const auto& v : x_coords()) {
            dq.push_back(evaluate(differentiate(quadric(), v), img));
            dt.push_back(evaluate(differentiate(T, v), img));
        }
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) CHECK(dq[a] * dt[b] == dq[b] * dt[a]);
    }
}

TEST_CASE("fourteen nodal family") {
    FourteenNodalParams p;
    p.a0 = 1;
    p.a1 = 2;
    p.b0 = 1;
    p.b1 = 3;
    p.K1 = X("x0 - x3");
    p.K2 = X("x1 - x2");
    p.alpha1 = Scalar(1, 10);
    p.alpha2 = Scalar(1, 10);
    const auto f = fourteen_nodal_family(p);
    CHECK(f.factor == Scalar(6));
    CHECK(f.L0 == X("x3"));
    CHECK(f.L1 == X("-3*x2 + x3"));
    CHECK(f.L2 == X("-2*x1 + x3"));
    CHECK(f.L3 == X("6*x0 - 2*x1 - 3*x2 + x3"));
    CHECK(f.Q == quadric() + Scalar(6, 100) * p.K1 * p.K2);
    CHECK(f.quartic == f.spec.branch());
    CHECK(f.L0 * f.L3 - f.L1 * f.L2 == f.factor * quadric());

    p.alpha1 = 0;
    const auto g = fourteen_nodal_family(p);
    CHECK(g.Q == quadric());
    CHECK(g.quartic == quadric() * quadric());

    p.a1 = 0;  // lambda = 0, so a1 = lambda*a0
    try {
        (void)fourteen_nodal_family(p);
        FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("formula breaks down") != std::string::npos);
        CHECK(std::string(e.what()).find("a1 - lambda*a0") != std::string::npos);
    }
}

TEST_CASE("torus family") {
    const auto p = TorusParams::from_factors({1, 1, 1}, {1, 2, Scalar(1, 2)});
    CHECK(p.A == std::array<Scalar, 4>{1, Scalar(7, 2), Scalar(7, 2), 1});
    const MultiPoly K = torus_cubic(p.A);
    CHECK(K == X("(x0 + x3)*(x0 + 2*x3)*(x0 + x3/2)"));

    TorusParams q = p;
    q.s = 0;
    q.alpha1 = Scalar(1, 2);
    q.alpha2 = Scalar(1, 3);
    const auto spec = torus_family(q);
    CHECK(spec.L == X("x0"));
    CHECK(spec.first == P("y1*y2") + K * X("x0") * P("y0^2"));
    CHECK(spec.branch() == quadric() * quadric() + Scalar(4, 6) * K * X("x0"));

    const auto A = torus_coefficients({P("a1"), P("a2"), P("a3")}, {P("b1"), P("b2"), P("b3")});
    CHECK(A[3] == P("a1*a2*a3"));
    CHECK(A[2] == P("a1*a2*b3 + a1*b2*a3 + b1*a2*a3"));
    CHECK(A[1] == P("a1*b2*b3 + b1*a2*b3 + b1*b2*a3"));
    CHECK(A[0] == P("b1*b2*b3"));
    const MultiPoly prod = P("(a1*x0 + b1*x3)*(a2*x0 + b2*x3)*(a3*x0 + b3*x3)");
    CHECK(torus_cubic(A) == prod);
}

TEST_CASE("l_from_point") {
    // aa = 0: tangent plane at a point of Q.
    const RulingPoint rp{2, 3, 1, 5};
    const auto x = segre_point(rp);
    const MultiPoly L = l_from_point(X("x0^3"), 0, x);
    std::vector<Scalar> t, l;
    for (const auto& v : x_coords()) {
        t.push_back(evaluate(differentiate(tangent_plane(rp), v), x));
        l.push_back(evaluate(differentiate(L, v), x));
    }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(t[a] * l[b] == t[b] * l[a]);

    // K = x0^3, aa = 1/2, P = (1, 1, 0, 1): Q(P) = 1 = 2 * (1/2) * K(P).
    const MultiPoly K = X("x0^3");
    const std::vector<Scalar> Pt{1, 1, 0, 1};
    const MultiPoly L2 = l_from_point(K, Scalar(1, 2), Pt);
    const MultiPoly F = branch_quartic(K, L2, Scalar(1, 2));
    for (const auto& v : x_coords()) CHECK(evaluate(differentiate(F, v), Pt).is_zero());
    CHECK(evaluate(F, Pt).is_zero());
    CHECK(alpha_product_for_point(K, Pt) == Scalar(1, 2));

    CHECK_THROWS(l_from_point(K, Scalar(1, 2), {0, 1, 0, 1}));  // K(P) = 0
    CHECK_THROWS(l_from_point(K, Scalar(1, 3), Pt));            // off the blow-up locus
}

TEST_CASE("segre and igusa parametrizations") {
    const auto s = segre_parametrization();
    CHECK(substitute(P("x + y + z + xp + yp + zp"), s).is_zero());
    CHECK(substitute(P("x*y*z + xp*yp*zp"), s).is_zero());
    const auto ig = igusa_parametrization();
    CHECK(substitute(P("a + b + c + ap + bp + cp"), ig).is_zero());
    CHECK(ig.at("a") == P("(z3 - z1)*z2*(z0 - z1)*(z0 - z3)"));
    CHECK(ig.at("b") == P("(z1 - z2)*z3*(z0 - z2)*(z0 - z1)"));
}

TEST_CASE("kummer family") {
    KummerParams zero;
    const auto f0 = kummer_family(zero);
    CHECK(f0.branch == P("(a*ap - b*bp)^2"));
    CHECK(f0.second == P("-(a*ap - b*bp)*y0"));
    CHECK(f0.first == P("y1*y2") + P("a*ap*c*y0^2") * f0.c2);

    // Reducible-fibre locus: aa*a1*b1 = aa*a0*b1 = 1.
    KummerParams red;
    red.alpha1 = 2;
    red.alpha2 = 1;
    red.a0 = 1;
    red.a1 = 1;
    red.b0 = 3;
    red.b1 = Scalar(1, 2);
    const auto fr = kummer_family(red);
    CHECK(fr.c_coefficient.is_zero());
    CHECK(fr.relation == Scalar(1 - 2 * 3) * P("a"));
    red.eliminate_c = true;
    CHECK_THROWS_AS(kummer_family(red), std::invalid_argument);

    KummerParams gen;
    gen.alpha1 = Scalar(1, 10);
    gen.alpha2 = Scalar(1, 7);
    gen.a0 = 2;
    gen.a1 = 3;
    gen.b0 = -1;
    gen.b1 = 5;
    gen.eliminate_c = true;
    const auto fg = kummer_family(gen);
    CHECK(fg.relation.is_zero());
    CHECK_FALSE(fg.branch.used_variables().empty());
    for (const auto& v : fg.branch.used_variables()) CHECK(v != "c");
    for (const auto& v : fg.first.used_variables()) CHECK(v != "c");
}
