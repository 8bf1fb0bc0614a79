#include "doctest.h"

#include <random>

#include "nodal/linalg.hpp"
#include "nodal/multipoly.hpp"
#include "nodal/univariate.hpp"
#include "random_poly.hpp"

using namespace nodal;
using nodal::testing::random_homogeneous;
using nodal::testing::random_nonzero;
using nodal::testing::random_poly;
using nodal::testing::random_scalar;

namespace {

MultiPoly P(const char* s) { return MultiPoly::parse(s); }
MultiPoly v(const char* s) { return MultiPoly::variable(s); }

const std::vector<std::string> kX{"x0", "x1", "x2", "x3"};

}  // namespace

TEST_CASE("scalar lowest terms and text form") {
    Scalar a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(a.denominator() == 2);
    CHECK(Scalar::parse("10/4") == Scalar(5, 2));
    CHECK(Scalar::parse("-7").str() == "-7");
    CHECK_THROWS(Scalar::parse("1/0"));
    CHECK_THROWS(Scalar::parse("1.5"));
    CHECK_THROWS(Scalar(1) / Scalar(0));
    Scalar r;
    CHECK(exact_sqrt(Scalar(9, 4), r));
    CHECK(r == Scalar(3, 2));
    CHECK_FALSE(exact_sqrt(Scalar(2), r));
    CHECK(rational_approximation(0.333333333333L, 100) == Scalar(1, 3));
}

TEST_CASE("add and mul") {
    CHECK((P("x + y") + P("-x")) == P("y"));
    CHECK((P("x0*x3 - x1*x2") * MultiPoly(1)).str() == "x0*x3 - x1*x2");
    const MultiPoly lhs = (P("x1*x2 + y1*y2 - z1*z2")).pow(2) - 4 * P("x1*x2*y1*y2");
    const MultiPoly rhs =
        P("(x1*x2)^2 + (y1*y2)^2 + (z1*z2)^2 - 2*y1*y2*z1*z2 - 2*x1*x2*z1*z2 - 2*x1*x2*y1*y2");
    CHECK((lhs - rhs).is_zero());
    CHECK((P("x + y") - P("y + x")).is_zero());
    CHECK((P("x + y") + P("-x")).variables() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("canonical printing and round trip") {
    const MultiPoly p = MultiPoly::parse("3/2*x0^2*x3 - x1*x2", kX);
    CHECK(p.str() == "3/2*x0^2*x3 - x1*x2");
    CHECK(MultiPoly().str() == "0");
    CHECK(P("-1").str() == "-1");
    CHECK(P("x2 + x10").variables() == std::vector<std::string>{"x2", "x10"});
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const MultiPoly q = random_poly(rng, {"x0", "x1", "a'", "b_2"}, 4, 6);
        const MultiPoly back = MultiPoly::parse(q.str(), q.variables());
        CHECK(back.str() == q.str());
        CHECK(back == q);
    }
    CHECK_THROWS(P("x/y"));
    CHECK_THROWS(P("x^"));
    CHECK_THROWS(P("(x"));
    CHECK_THROWS(P("x $ y"));
}

TEST_CASE("differentiate") {
    CHECK(differentiate(P("x0*x3 - x1*x2"), "x0") == MultiPoly::parse("x3"));
    CHECK_THROWS(differentiate(P("x0"), "w"));

    // Gradient of the branch quartic against its product-rule expansion.
    const MultiPoly Q = P("x0*x3 - x1*x2");
    const MultiPoly K = P("x0^3 + 2*x1*x2*x3 - x3^3");
    const MultiPoly L = P("x0 - 3*x1 + x2/2 + 5*x3");
    const Scalar aa(3, 7);
    const MultiPoly F = Q * Q - Scalar(4) * aa * K * L;
    for (const auto& x : kX) {
        const MultiPoly expected = 2 * Q * differentiate(Q, x) -
                                   Scalar(4) * aa * (L * differentiate(K, x) + K * differentiate(L, x));
        CHECK(differentiate(F, x) == expected);
    }
}

TEST_CASE("Euler identity for homogeneous polynomials") {
    std::mt19937_64 rng(5);
    for (unsigned d = 1; d <= 5; ++d) {
        for (int i = 0; i < 10; ++i) {
            const MultiPoly f = random_homogeneous(rng, kX, d, 8);
            MultiPoly e(kX);
            for (const auto& x : kX) e += v(x.c_str()) * differentiate(f, x);
            CHECK(e == Scalar(static_cast<long>(d)) * f);
        }
    }
}

TEST_CASE("mixed partials commute") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 30; ++i) {
        const MultiPoly f = random_poly(rng, kX, 5, 10);
        CHECK(differentiate(differentiate(f, "x0"), "x2") == differentiate(differentiate(f, "x2"), "x0"));
        CHECK(differentiate(differentiate(f, "x1"), "x3") == differentiate(differentiate(f, "x3"), "x1"));
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        const auto a = random_poly(rng, {"x", "y", "z"}, 3, 5);
        const auto b = random_poly(rng, {"y", "w"}, 3, 5);
        const auto c = random_poly(rng, {"z", "x"}, 3, 5);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("substitute") {
    const MultiPoly Q = P("x0*x3 - x1*x2");
    const Substitution segre{{"x0", P("s0*t0")}, {"x1", P("s0*t1")}, {"x2", P("s1*t0")}, {"x3", P("s1*t1")}};
    CHECK(substitute(Q, segre).is_zero());

    const Substitution basis{{"x", P("z1*(z0 - z2)")}, {"y", P("z2*(z0 - z3)")}, {"z", P("z3*(z0 - z1)")},
                             {"xp", P("z2*(z1 - z0)")}, {"yp", P("z3*(z2 - z0)")}, {"zp", P("z1*(z3 - z0)")}};
    CHECK(substitute(P("x*y*z + xp*yp*zp"), basis).is_zero());

    const Substitution id{{"x0", v("x0")}, {"x1", v("x1")}, {"x2", v("x2")}, {"x3", v("x3")}};
    CHECK(substitute(Q, id) == Q);
    CHECK(substitute(Q, {}) == Q);
}

TEST_CASE("composition of substitutions") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        const auto p = random_poly(rng, {"x", "y", "z"}, 3, 6);
        const Substitution sigma{{"x", random_poly(rng, {"y", "u"}, 2, 3)}, {"y", random_poly(rng, {"z", "u"}, 2, 3)}};
        const Substitution tau{{"u", random_poly(rng, {"x", "z"}, 2, 3)}, {"z", random_poly(rng, {"u"}, 2, 3)}};
        CHECK(substitute(substitute(p, sigma), tau) == substitute(p, compose(sigma, tau)));
    }
}

TEST_CASE("evaluate") {
    const MultiPoly Q = MultiPoly::parse("x0*x3 - x1*x2", kX);
    CHECK(evaluate(Q, std::vector<Scalar>{0, 1, 0, 0}).is_zero());
    CHECK(evaluate(Q, std::vector<Scalar>{1, 1, 1, 1}).is_zero());
    CHECK_THROWS(evaluate(Q, std::vector<Scalar>{1, 1, 1}));

    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        const Scalar a0 = random_scalar(rng), a1 = random_scalar(rng), b0 = random_scalar(rng), b1 = random_scalar(rng);
        const std::vector<Scalar> c{a1 * b1, -a1 * b0, -a0 * b1, a0 * b0};
        const MultiPoly L3 = MultiPoly::linear(kX, c);
        CHECK(evaluate(L3, std::vector<Scalar>{a0 * b0, a0 * b1, a1 * b0, a1 * b1}).is_zero());
    }
}

TEST_CASE("exact division, determinant, multivariate resultant") {
    const MultiPoly a = P("x^2 - y^2"), b = P("x + y");
    CHECK(divide_exact(a, b) == P("x - y"));
    CHECK_THROWS(divide_exact(P("x^2 + 1"), b));
    std::vector<std::vector<MultiPoly>> m{{P("a"), P("b")}, {P("c"), P("d")}};
    CHECK(determinant(m) == P("a*d - b*c"));
    // Resultant of y - x^2 and y - 1 in y.
    CHECK(resultant(P("y - x^2"), P("y - 1"), "y") == P("x^2 - 1") * Scalar(1));
    CHECK(quadratic_discriminant(P("a*t^2 + b*t + c"), "t") == P("b^2 - 4*a*c"));
}

TEST_CASE("multigrading") {
    const Grading g{{"s0", {1, 0}}, {"s1", {1, 0}}, {"t0", {0, 1}}, {"t1", {0, 1}}};
    CHECK(multidegree(P("s0*t0*t1 + s1*t1^2"), g) == std::vector<int>{1, 2});
    CHECK_FALSE(is_homogeneous(P("s0*t0 + s1"), g));
}

TEST_CASE("univariate resultant") {
    // Sylvester matrix [[1,-1],[1,-2]] has determinant -1.
    CHECK(resultant_univariate(UniPoly{-1, 1}, UniPoly{-2, 1}) == Scalar(-1));
    const UniPoly p({3, -2, 5, 1});
    CHECK(resultant_univariate(p, p).is_zero());
    const UniPoly f = UniPoly{-3, 1}.pow(2) * UniPoly{1, 1};
    CHECK(resultant_univariate(f, f.derivative()).is_zero());
    CHECK_THROWS(resultant_univariate(UniPoly(), p));
}

TEST_CASE("discriminant of binary forms") {
    // a x0^2 + b x0 x1 + c x1^2 -> b^2 - 4ac exactly.
    CHECK(discriminant_binary(BinaryForm({2, 7, 3})) == Scalar(49 - 24));
    CHECK(discriminant_binary(BinaryForm({1, -2, 1})).is_zero());
    CHECK_THROWS(discriminant_binary(BinaryForm({1, 1})));
    // Cubic x0^3 + p x0 x1^2 + q x1^3 gives -4p^3 - 27q^2.
    CHECK(discriminant_binary(BinaryForm({1, 0, 2, 3})) == Scalar(-4 * 8 - 27 * 9));
    // Quartic with roots 1,2,3,4: product of squared differences.
    const UniPoly r = UniPoly{-1, 1} * UniPoly{-2, 1} * UniPoly{-3, 1} * UniPoly{-4, 1};
    std::vector<Scalar> c(r.coeffs().rbegin(), r.coeffs().rend());
    CHECK(discriminant_binary(BinaryForm(c)) == Scalar(1 * 4 * 9 * 1 * 4 * 1));
}

TEST_CASE("discriminant vanishes iff a repeated linear factor") {
    std::mt19937_64 rng(10);
    int repeated = 0;
    for (int i = 0; i < 200; ++i) {
        std::uniform_int_distribution<int> deg(2, 5);
        const int d = deg(rng);
        std::vector<std::pair<Scalar, Scalar>> ls;
        std::uniform_int_distribution<int> coin(0, 3);
        for (int k = 0; k < d; ++k) {
            if (k > 0 && coin(rng) == 0) {
                ls.push_back(ls.back());
            } else {
                ls.emplace_back(random_nonzero(rng, 3, 2), random_scalar(rng, 3, 2));
            }
        }
        UniPoly f(1);  // dehomogenized in x1 = 1; every factor has x0-coefficient nonzero
        for (const auto& [a, b] : ls) f = f * UniPoly{b, a};
        std::vector<Scalar> coeffs(f.coeffs().rbegin(), f.coeffs().rend());
        const BinaryForm bf(coeffs);
        const UniPoly fx0 = bf.d_x0().dehomogenize();
        const bool common = gcd(f, fx0).degree() > 0;
        repeated += common ? 1 : 0;
        CHECK((discriminant_binary(bf).is_zero()) == common);
    }
    CHECK(repeated > 20);
}

TEST_CASE("univariate gcd and roots") {
    const UniPoly a = UniPoly{-1, 1} * UniPoly{2, 1} * UniPoly{2, 1};
    const UniPoly b = UniPoly{2, 1} * UniPoly{5, 0, 1};
    CHECK(gcd(a, b) == UniPoly{2, 1});
    CHECK(squarefree_part(a) == UniPoly{-1, 1} * UniPoly{2, 1});
    const auto roots = real_roots(UniPoly{-2, 0, 1}, 1e-14L);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[1] - std::sqrt(2.0L)) < 1e-13L);
    CHECK(count_real_roots(UniPoly{1, 0, 1}, Scalar(-10), Scalar(10)) == 0);
    const auto cr = complex_roots(UniPoly{1, 0, 1});
    CHECK(cr.size() == 2);
    CHECK(std::abs(std::abs(cr[0].imag()) - 1.0L) < 1e-12L);
}

TEST_CASE("rational functions reduce") {
    const RationalFunction f(UniPoly{-1, 0, 1}, UniPoly{2, 2});
    CHECK(f.numerator() == UniPoly{-1, 1} * Scalar(1, 2));
    CHECK(f.denominator() == UniPoly(1));
    CHECK_THROWS(RationalFunction(UniPoly(1), UniPoly()));
    const RationalFunction g(UniPoly{0, 1}, UniPoly{1, 1});
    CHECK((g.derivative()).numerator() == UniPoly(1));
    CHECK(g(Scalar(1)) == Scalar(1, 2));
}

TEST_CASE("exact linear algebra") {
    Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m) == 2);
    const auto ns = nullspace(m, 3);
    REQUIRE(ns.size() == 1);
    CHECK(is_zero_vector(mat_vec(m, ns[0])));
    CHECK(determinant(Matrix{{2, 1}, {1, 3}}) == Scalar(5));
}
