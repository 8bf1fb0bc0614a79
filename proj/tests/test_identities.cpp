#include "doctest.h"

#include <chrono>
#include <random>

#include "nodal/identities.hpp"
#include "random_poly.hpp"

using namespace nodal;
using namespace nodal::testing;

namespace {

MultiPoly var(const std::string& s) { return MultiPoly::variable(s); }

}  // namespace

TEST_CASE("full suite passes quickly") {
    const auto start = std::chrono::steady_clock::now();
    const auto reports = run_suite("all");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(reports.size() >= 12);
    for (const auto& r : reports) {
        INFO(r.name << ": " << r.witness.str());
        CHECK(r.passed());
        CHECK(r.status() == "pass");
        CHECK_FALSE(r.anchor.empty());
    }
    CHECK(secs < 10.0);
    CHECK(run_suite("all", 1).size() == reports.size());
}

TEST_CASE("suite selection") {
    CHECK(run_suite("segre-igusa").size() == 3);
    CHECK(run_suite("chart").size() == 3);
    CHECK_THROWS_AS(run_suite("nosuch"), std::invalid_argument);
    CHECK_THROWS_AS(suite_cases("nosuch"), std::invalid_argument);
    std::size_t total = 0;
    for (std::size_t k = 1; k < suite_names().size(); ++k) total += suite_cases(suite_names()[k]).size();
    CHECK(total == suite_cases("all").size());
}

TEST_CASE("negative controls fail") {
    for (const auto& c : suite_cases("all")) {
        for (const auto& p : perturbations(c)) {
            INFO(c.name);
            CHECK_FALSE(check(p).passed());
        }
    }
}

TEST_CASE("chart equations for n = 3") {
    const auto c = verify_chart_blowdown(3);
    // 3 row pairs times 3 column pairs, plus the two chart equations
    CHECK(c.sides.size() == 11);
    CHECK(check(c).passed());
    CHECK(verify_chart_blowdown(2).sides.size() == 5);
    CHECK_THROWS(verify_chart_blowdown(1));
}

TEST_CASE("birational map") {
    const MultiPoly s0 = var("s0"), s1 = var("s1"), t0 = var("t0"), t1 = var("t1");
    std::mt19937_64 rng(8);
    const MultiPoly K = random_homogeneous(rng, x_coords(), 3, 6);
    const Scalar a0 = random_nonzero(rng), a1 = random_nonzero(rng), b0 = random_nonzero(rng), b1 = random_nonzero(rng);
    const MultiPoly L = tangent_plane(a0, a1, b0, b1);
    CHECK(check(verify_birational_map(K, L, a1 * s0 - a0 * s1, b1 * t0 - b0 * t1)).passed());
    // psi1 psi2 must restrict L
    CHECK_FALSE(check(verify_birational_map(K, L, a1 * s0 + a0 * s1, b1 * t0 - b0 * t1)).passed());
    CHECK(check(verify_birational_map(K, MultiPoly(1), MultiPoly(1), MultiPoly(1))).passed());
}

TEST_CASE("elimination and the delta equation") {
    std::mt19937_64 rng(9);
    const MultiPoly K = random_homogeneous(rng, x_coords(), 3, 5), L = random_linear(rng, x_coords());
    CHECK(check(verify_elimination(K, L, quadric())).passed());
    CHECK(check(verify_delta_reduction(K, L, quadric())).passed());

    // alpha2 = 0 in the eliminated quadratic leaves y2 (alpha1 y2 - Q y0)
    const auto c = verify_elimination(var("K"), var("L"), var("Q"));
    const MultiPoly deg = substitute(c.sides[0].first, {{"alpha2", MultiPoly(0)}});
    const MultiPoly y0 = var("y0"), y2 = var("y2");
    CHECK(deg == y2 * (var("alpha1") * y2 - var("Q") * y0));
}

TEST_CASE("tangent product") {
    CHECK(check(verify_tangent_product(var("a0"), var("a1"), var("b0"), var("b1"), var("lambda"), var("mu"))).passed());
    std::mt19937_64 rng(10);
    for (int i = 0; i < 5; ++i) {
        const MultiPoly a0(random_scalar(rng)), a1(random_scalar(rng)), b0(random_scalar(rng)), b1(random_scalar(rng));
        const MultiPoly la(random_scalar(rng)), mu(random_scalar(rng));
        CHECK(check(verify_tangent_product(a0, a1, b0, b1, la, mu)).passed());
    }
    // a1 = lambda a0: both sides vanish and Q cannot be recovered
    const auto c = verify_tangent_product(MultiPoly(1), MultiPoly(2), var("b0"), var("b1"), MultiPoly(2), var("mu"));
    CHECK(c.sides[0].first.is_zero());
    CHECK(c.sides[0].second.is_zero());
}

TEST_CASE("trivial deformation") {
    CHECK(check(verify_trivial_deformation(var("Phi"), MultiPoly(0), var("Q"))).passed());
    std::mt19937_64 rng(12);
    const auto c = verify_trivial_deformation(random_homogeneous(rng, x_coords(), 4, 6),
                                              random_homogeneous(rng, x_coords(), 2, 4), quadric());
    CHECK(check(c).passed());
}

TEST_CASE("small resolution chart") {
    CHECK(check(verify_small_resolution_chart(var("L"))).passed());
    const auto c = verify_small_resolution_chart(MultiPoly(1));
    CHECK(check(c).passed());
    std::mt19937_64 rng(13);
    CHECK(check(verify_small_resolution_chart(random_linear(rng, x_coords()))).passed());
}

TEST_CASE("kummer branch") {
    KummerParams p;
    p.alpha1 = var("alpha1");
    p.alpha2 = var("alpha2");
    CHECK(check(verify_kummer_branch(p)).passed());
    CHECK(check(verify_kummer_reducible(p)).passed());
    KummerParams zero;
    zero.alpha1 = var("alpha1");
    const KummerFamily f = kummer_family(zero);
    const MultiPoly a = var("a"), ap = var("ap"), b = var("b"), bp = var("bp");
    CHECK(f.branch == (a * ap - b * bp).pow(2));
}

TEST_CASE("real structure") {
    for (const auto& c : suite_cases("real-structure")) CHECK(check(c).passed());
    const MultiPoly x0 = var("x0"), x3 = var("x3"), y0 = var("y0"), y1 = var("y1"), y2 = var("y2");
    const GaussPoly i = GaussPoly::i();
    const GaussPoly broken = GaussPoly(y1 * y2) + (GaussPoly(x0) + i * GaussPoly(x3)) * GaussPoly(x0 * x0 * x3 * y0 * y0);
    const GaussPoly second(var("alpha2") * y1 + var("alpha1") * y2 - quadric() * y0);
    const auto r = check(verify_real_structure(broken, second));
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.witness.is_zero());
    // the involution is an involution
    CHECK(real_involution(real_involution(broken)) == broken);
    // an x1-x2 asymmetric real quartic is not fixed
    const GaussPoly asym(y1 * y2 - var("x1").pow(4) * y0 * y0);
    CHECK_FALSE(check(verify_real_structure(asym, second)).passed());
}

TEST_CASE("scaling invariance") {
    std::mt19937_64 rng(14);
    CHECK(check(verify_scaling_invariance(random_homogeneous(rng, x_coords(), 4, 8))).passed());
    const auto c = verify_scaling_invariance(random_homogeneous(rng, x_coords(), 4, 8));
    const Substitution unit{{"a", MultiPoly(1)}, {"b", MultiPoly(1)}, {"lambda", MultiPoly(1)}};
    for (const auto& [computed, displayed] : c.sides) CHECK(substitute(computed, unit) == substitute(displayed, unit));
    // a non-homogeneous Phi breaks the weight
    CHECK_FALSE(check(verify_scaling_invariance(var("x0").pow(4) + var("x1"))).passed());
}

TEST_CASE("contact conic degeneration") {
    const std::array<MultiPoly, 4> planes{
        MultiPoly::parse("x0 - 2*x1 + 2*x2 - 4*x3"), MultiPoly::parse("-3*x0 + 4*x1 - 3*x2 + x3"),
        MultiPoly::parse("4*x0 - 2*x1 - 3*x2 - x3"), MultiPoly::parse("-2*x0 + x1 - 2*x2 + 3*x3")};
    const std::array<std::vector<Scalar>, 3> plane{std::vector<Scalar>{1, 0, 2, -1}, std::vector<Scalar>{0, 1, 1, 3},
                                                   std::vector<Scalar>{2, -1, 0, 1}};
    const ContactConic cc = contact_conic_degeneration(planes, quadric(), plane);
    CHECK(cc.quartic.degree() == 4);
    CHECK_FALSE(discriminant_binary(cc.quartic).is_zero());
    CHECK(substitute(cc.determinant, {{"lambda", MultiPoly(0)}}).is_zero());
    CHECK(substitute(cc.determinant, {{"mu", MultiPoly(0)}}).is_zero());
    CHECK(check(verify_contact_conic(planes, quadric(), plane)).passed());

    // equal planes and Q = 0: every member is a double line
    const std::array<MultiPoly, 4> doubled{planes[0], planes[0], planes[0], planes[0]};
    CHECK_THROWS(contact_conic_degeneration(doubled, MultiPoly(0), plane));
}
